#include <doctest.h>

#include "bicrit/marathe.hpp"
#include "bicrit/oracle.hpp"
#include "bicrit/sweep.hpp"
#include "generators.hpp"

using namespace bicrit;

TEST_CASE("h values on the first triangle") {
  const MstProblem exact(marathe::example1_graph());
  const auto h3 = marathe::h_value(exact, Rational{3}, Rational{2});
  CHECK(h3.h == 7);
  const auto h4 = marathe::h_value(exact, Rational{4}, Rational{2});
  CHECK(h4.h == 8);
  CHECK(h4.record.image == CostPair{2, 4});
  const auto h0 = marathe::h_value(exact, Rational{0}, Rational{2});
  CHECK(h0.h == 2);  // f2 alone
  CHECK_FALSE(h0.record.produced_at);
}

TEST_CASE("first counterexample") {
  const auto r = marathe::reproduce_example1();
  REQUIRE(r.adversarial.size() == 2);
  CHECK(r.adversarial[0].d == 3);
  CHECK(r.adversarial[0].h == 7);
  CHECK(r.adversarial[0].record.image == CostPair{2, 4});
  CHECK(r.adversarial[1].d == 4);
  CHECK(r.adversarial[1].h == 10);
  CHECK(r.adversarial[1].record.image == CostPair{4, 2});
  CHECK(r.ratio3_adversarial == Rational(7, 3));
  CHECK(r.ratio4_adversarial == Rational(5, 2));
  CHECK(r.ratio3_exact == Rational(7, 3));
  CHECK(r.ratio4_exact == 2);
  CHECK(r.reproduced());
  for (const auto& e : r.search.tested) {
    CHECK(e.h == e.d / r.search.params.budget * e.record.image.f1 + e.record.image.f2);
  }
}

TEST_CASE("second counterexample") {
  const auto r = marathe::reproduce_example2();
  CHECK(r.trace.no_solution());
  CHECK(r.opt_at_budget == Rational{3});
  CHECK(r.feasible.size() == 2);
  for (const auto& f : r.feasible) CHECK(f.image == CostPair{3, 3});
  CHECK(r.reproduced());
  for (const auto& e : r.trace.tested) {
    CHECK(e.h == Rational(4, 3) * e.d + 2);
  }

  const MstProblem problem(marathe::example2_graph());
  const auto sweep = solve_budget_sweep(problem, BudgetQuery(Rational{3}, Epsilon(Rational(2, 3))));
  CHECK(sweep.certified());
}

TEST_CASE("search succeeds where h(D)/D crosses the threshold") {
  // one tree (1, 1): h(D) = D/B + 1, so h(D)/D = 1/B + 1/D
  BiweightedGraph g;
  g.node_count = 2;
  g.edges = {{0, 1, {1, 1}}};
  const MstProblem problem(g);
  const auto t = marathe::marathe_search(problem, {Rational{1}, Rational{1}, Rational{4}});
  // threshold 2: h(1)/1 = 2 is not above it, so D' = 0 and D'+1 = 1 succeeds
  REQUIRE_FALSE(t.no_solution());
  CHECK(t.tested.back().d == 1);
}

TEST_CASE("h(D)/D is nonincreasing for exact oracles") {
  testing::Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    const auto inst = testing::random_mst(rng);
    const MstProblem p(inst.graph);
    const Rational b = p.bounds().ub1 / 2;
    const Rational ub2 = p.bounds().ub2;
    const auto top = (Rational{2} * ub2).floor_to_int64();
    Rational prev;
    for (std::int64_t d = 1; d <= top; ++d) {
      const auto e = marathe::h_value(p, Rational{static_cast<long>(d)}, b);
      const Rational ratio = e.h / e.d;
      if (d > 1) CHECK(ratio <= prev);
      prev = ratio;
    }
  }
}
