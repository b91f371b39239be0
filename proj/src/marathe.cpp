#include "bicrit/marathe.hpp"

#include <memory>

#include "bicrit/errors.hpp"
#include "bicrit/oracle.hpp"

namespace bicrit::marathe {

namespace {

BiweightedGraph triangle(CostPair a, CostPair b, CostPair c) {
  BiweightedGraph g;
  g.node_count = 3;
  g.edges = {{0, 1, std::move(a)}, {1, 2, std::move(b)}, {0, 2, std::move(c)}};
  return g;
}

// h(D)/D > limit, with h(0)/0 = +infinity
bool above(const TraceEntry& e, const Rational& limit) {
  return e.d.is_zero() || e.h / e.d > limit;
}

Rational ratio(const TraceEntry& e) { return e.h / e.d; }

}  // namespace

BiweightedGraph example1_graph() { return triangle({3, 1}, {1, 3}, {1, 1}); }

BiweightedGraph example2_graph() { return triangle({2, 1}, {2, 1}, {1, 2}); }

TraceEntry h_value(const Problem& problem, const Rational& d, const Rational& budget) {
  if (d.sign() < 0) throw InvalidArgument("D must be nonnegative");
  if (!budget.is_positive()) throw InvalidArgument("budget must be positive");
  const Rational w1 = d / budget;
  Token token = problem.solve_scaled(w1, Rational{1});
  CostPair image = problem.evaluate(token);
  Rational h = w1 * image.f1 + image.f2;
  std::optional<Weight> at;
  if (d.is_positive()) at = Weight(budget / d);
  return TraceEntry{d, std::move(h), SolutionRecord{std::move(token), std::move(image), at}};
}

MaratheTrace marathe_search(const Problem& problem, const MaratheParams& params) {
  if (!params.eps.is_positive()) throw InvalidArgument("eps must be positive");
  if (!params.ub2.is_positive()) throw InvalidArgument("ub2 must be positive");

  MaratheTrace trace;
  trace.params = params;
  trace.alpha = problem.alpha();
  const Rational limit = trace.alpha * (params.eps + 1);

  auto probe = [&](std::int64_t d) -> const TraceEntry& {
    trace.tested.push_back(h_value(problem, Rational{d}, params.budget));
    return trace.tested.back();
  };

  std::int64_t lo = 0;
  std::int64_t hi = (params.eps * params.ub2).floor_to_int64();
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (above(probe(mid), limit)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const TraceEntry& next = probe(lo + 1);
  if (!above(next, limit)) trace.solution = next.record;
  return trace;
}

Example1Report reproduce_example1() {
  const Rational budget{2};
  auto exact = std::make_shared<const MstProblem>(example1_graph());
  // gamma = B/D: D = 3 -> 2/3, D = 4 -> 1/2
  auto adversary = adversarial_wrap(exact, Rational(5, 4),
                                    {ScriptedAnswer{Rational(2, 3), Token{1, 2}},
                                     ScriptedAnswer{Rational(1, 2), Token{0, 2}}});

  Example1Report report;
  for (int d : {3, 4}) {
    report.adversarial.push_back(h_value(*adversary, Rational{d}, budget));
    report.exact.push_back(h_value(*exact, Rational{d}, budget));
  }
  report.search = marathe_search(*adversary, MaratheParams{budget, Rational{1}, Rational{4}});
  report.ratio3_adversarial = ratio(report.adversarial[0]);
  report.ratio4_adversarial = ratio(report.adversarial[1]);
  report.ratio3_exact = ratio(report.exact[0]);
  report.ratio4_exact = ratio(report.exact[1]);
  return report;
}

Example2Report reproduce_example2() {
  const Rational budget{3};
  const MstProblem problem(example2_graph());

  Example2Report report;
  report.trace = marathe_search(problem, MaratheParams{budget, Rational(2, 3), Rational{3}});
  const auto all = oracle::enumerate_all(problem);
  report.opt_at_budget = oracle::exact_opt_budget(all, budget);
  for (const auto& rec : all) {
    if (rec.image.f1 <= budget) report.feasible.push_back(rec);
  }
  return report;
}

}  // namespace bicrit::marathe
