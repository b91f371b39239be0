// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only
// if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "bicrit/exact_search.hpp"
#include "bicrit/marathe.hpp"
#include "bicrit/oracle.hpp"
#include "bicrit/pareto.hpp"
#include "bicrit/sweep.hpp"
#include "generators.hpp"

using namespace bicrit;
namespace bt = bicrit::testing;

namespace {

constexpr std::uint64_t kSuiteSeed = 0x5eed2024;
constexpr int kPerKind = 55;

struct Tally {
  long runs = 0;
  long failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++runs;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool passed() const { return runs > 0 && failures == 0; }
};

struct Case {
  Instance instance;
  std::shared_ptr<const Problem> problem;
  std::vector<SolutionRecord> all;
  std::vector<Rational> budgets;  // distinct achievable f1 values
};

const std::vector<Epsilon>& epsilons() {
  static const std::vector<Epsilon> eps{Epsilon(Rational{1}), Epsilon(Rational(1, 2)),
                                        Epsilon(Rational(1, 4))};
  return eps;
}

std::string label(std::size_t idx, const Case& c) {
  return "instance #" + std::to_string(idx) + " (" + to_string(c.instance.kind) + ")";
}

std::string label(std::size_t idx, const Case& c, const Rational& b, const Epsilon& e) {
  return label(idx, c) + " B=" + b.to_string() + " eps=" + e.value().to_string();
}

std::int64_t ceil_log2(std::int64_t n) {
  std::int64_t k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

bool monotone(const std::vector<SolutionRecord>& grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (grid[i].image.f1 > grid[j].image.f1 || grid[i].image.f2 < grid[j].image.f2) return false;
    }
  }
  return true;
}

bool is_exact_kind(const Case& c) { return c.instance.kind != ProblemKind::vc; }
bool is_parametric_kind(const Case& c) {
  return c.instance.kind == ProblemKind::mst || c.instance.kind == ProblemKind::path;
}

template <class Body>
Tally guarded(Body body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  return t;
}

int report(int number, const std::string& title, const Tally& t, const std::string& detail,
           double seconds) {
  std::ostringstream line;
  line << "criterion " << number << " [" << (t.passed() ? "PASS" : "FAIL") << "] " << title
       << ": " << detail << " (" << t.runs - t.failures << "/" << t.runs << " checks";
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.2f s)", seconds);
  line << buf;
  if (!t.passed() && !t.first_failure.empty()) line << " first failure: " << t.first_failure;
  std::cout << line.str() << std::endl;
  return t.passed() ? 0 : 1;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();

  std::vector<Case> cases;
  for (auto& inst : bt::instance_suite(kSuiteSeed, kPerKind)) {
    Case c;
    c.problem = make_problem(inst);
    c.instance = std::move(inst);
    c.all = oracle::enumerate_all(*c.problem);
    std::set<Rational> f1s;
    for (const auto& r : c.all) f1s.insert(r.image.f1);
    c.budgets.assign(f1s.begin(), f1s.end());
    cases.push_back(std::move(c));
  }
  std::cout << "suite: " << cases.size() << " instances (seed " << kSuiteSeed << ")" << std::endl;

  int failed = 0;
  auto timed = [&](int number, const std::string& title, const std::function<Tally()>& body,
                   const std::function<std::string(const Tally&)>& detail) {
    const auto t0 = clock::now();
    const Tally t = body();
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    failed += report(number, title, t, detail(t), s);
  };

  // 1 and 3 share the sweep runs.
  Tally monotonicity;
  timed(
      1, "budget-guarantee soundness (sweep)",
      [&] {
        return guarded([&](Tally& t) {
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            for (const auto& b : c.budgets) {
              const auto opt = oracle::exact_opt_budget(c.all, b);
              for (const auto& e : epsilons()) {
                const BudgetResult r = solve_budget_sweep(*c.problem, BudgetQuery(b, e));
                t.check(opt && r.solution &&
                            oracle::verify_budget(*r.solution, b, e, c.problem->alpha(), *opt),
                        label(idx, c, b, e));
                if (is_exact_kind(c)) {
                  monotonicity.check(monotone(r.transcript), label(idx, c, b, e));
                }
              }
            }
          }
        });
      },
      [&](const Tally&) {
        return std::to_string(cases.size()) +
               " instances, every distinct f1 budget, eps in {1, 1/2, 1/4}, factors "
               "(alpha(1+2eps), alpha(1+2/eps))";
      });

  timed(
      2, "binary-search parity and call bound",
      [&] {
        return guarded([&](Tally& t) {
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            if (!is_exact_kind(c)) continue;
            for (const auto& b : c.budgets) {
              const auto opt = oracle::exact_opt_budget(c.all, b);
              for (const auto& e : epsilons()) {
                const BudgetResult r = solve_budget_binary(*c.problem, BudgetQuery(b, e));
                const bool sound = opt && r.solution &&
                                   oracle::verify_budget(*r.solution, b, e, Rational{1}, *opt);
                const auto bound = static_cast<std::size_t>(ceil_log2(r.grid.size()) + 1);
                t.check(sound && r.certificate.oracle_calls <= bound, label(idx, c, b, e));
              }
            }
          }
        });
      },
      [](const Tally&) {
        return std::string("exact plugins, factors (1+2eps, 1+2/eps), calls <= ceil(log2 grid) + 1");
      });

  timed(
      3, "weighted-sum monotonicity over the grid", [&] { return monotonicity; },
      [](const Tally&) {
        return std::string("exact plugins, all grid pairs i < j: f1 nondecreasing, f2 nonincreasing");
      });

  timed(
      4, "parametric tightening",
      [&] {
        return guarded([&](Tally& t) {
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            if (!is_parametric_kind(c)) continue;
            for (const auto& b : c.budgets) {
              const auto opt = oracle::exact_opt_budget(c.all, b);
              for (const auto& e : epsilons()) {
                const BudgetResult r = solve_budget_parametric(*c.problem, BudgetQuery(b, e));
                const bool sound =
                    opt && r.solution &&
                    oracle::verify_budget(*r.solution, b, e, Rational{1}, *opt,
                                          oracle::FactorRule::parametric);
                t.check(sound && r.certificate.oracle_calls <= r.comparisons + 1,
                        label(idx, c, b, e));
              }
            }
          }
        });
      },
      [](const Tally&) {
        return std::string("mst and path, factors (1+eps, 1+1/eps), calls <= comparisons + 1");
      });

  timed(
      5, "Pareto coverage",
      [&] {
        return guarded([&](Tally& t) {
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            const Bounds bounds = c.problem->bounds();
            for (const auto& e : epsilons()) {
              const ParetoSet set = approximate_pareto(*c.problem, e);
              const Rational alpha = c.problem->alpha();
              const bool covered = oracle::verify_pareto_coverage(
                  set, c.all, alpha * (e.value() * 2 + 1), alpha * (Rational{2} / e.value() + 1));
              const Rational ratio = bounds.ub1 * bounds.ub2 / (bounds.lb1 * bounds.lb2);
              const auto bound = static_cast<std::size_t>(ceil_log(e.base(), ratio) + 2);
              t.check(covered && set.oracle_calls <= bound,
                      label(idx, c) + " eps=" + e.value().to_string());
              if (c.instance.kind == ProblemKind::mst) {
                const ParetoSet param = pareto_from_parametric(*c.problem, e);
                t.check(oracle::verify_pareto_coverage(param, c.all, e.value() + 1,
                                                       Rational{1} / e.value() + 1),
                        label(idx, c) + " parametric eps=" + e.value().to_string());
              }
            }
          }
        });
      },
      [](const Tally&) {
        return std::string(
            "grid curve (alpha(1+2eps), alpha(1+2/eps)) on all instances, parametric curve "
            "(1+eps, 1+1/eps) on mst, grid-size bound");
      });

  std::string ex1_detail;
  timed(
      6, "counterexample 1 (non-monotone h(D)/D)",
      [&] {
        return guarded([&](Tally& t) {
          const auto r = marathe::reproduce_example1();
          t.check(r.adversarial[0].h == 7 && r.adversarial[1].h == 10, "adversarial h values");
          t.check(r.ratio3_adversarial == Rational(7, 3), "h(3)/3 = 7/3 under the adversary");
          t.check(r.ratio4_adversarial == Rational(5, 2), "h(4)/4 = 5/2 under the adversary");
          t.check(r.ratio3_adversarial < r.ratio4_adversarial, "non-monotone under the adversary");
          t.check(r.ratio3_exact == Rational(7, 3) && r.ratio4_exact == 2, "exact ratios 7/3, 2");
          t.check(r.ratio3_exact >= r.ratio4_exact, "monotone with the exact oracle");
          ex1_detail = "adversary h(3)/3 = " + r.ratio3_adversarial.to_string() +
                       " < h(4)/4 = " + r.ratio4_adversarial.to_string() + "; exact " +
                       r.ratio3_exact.to_string() + " >= " + r.ratio4_exact.to_string();
        });
      },
      [&](const Tally&) { return ex1_detail; });

  std::string ex2_detail;
  timed(
      7, "counterexample 2 (no solution on a feasible budget)",
      [&] {
        return guarded([&](Tally& t) {
          const auto r = marathe::reproduce_example2();
          t.check(r.trace.no_solution(), "marathe search returns no solution");
          t.check(r.opt_at_budget && *r.opt_at_budget == 3, "brute-force OPT(3) = 3");
          const MstProblem problem(marathe::example2_graph());
          const BudgetQuery q(Rational{3}, Epsilon(Rational(2, 3)));
          const Rational opt{3};
          const auto sweep = solve_budget_sweep(problem, q);
          const auto binary = solve_budget_binary(problem, q);
          const auto param = solve_budget_parametric(problem, q);
          t.check(sweep.solution && oracle::verify_budget(*sweep.solution, q.budget, q.eps, 1, opt),
                  "sweep certified");
          t.check(binary.solution && oracle::verify_budget(*binary.solution, q.budget, q.eps, 1, opt),
                  "binary certified");
          t.check(param.solution && oracle::verify_budget(*param.solution, q.budget, q.eps, 1, opt,
                                                          oracle::FactorRule::parametric),
                  "parametric certified");
          ex2_detail = "outcome " + std::string(r.trace.no_solution() ? "NoSolution" : "Solution") +
                       ", OPT(3) = " + (r.opt_at_budget ? r.opt_at_budget->to_string() : "none") +
                       "; sweep/binary/parametric certified at B = 3, eps = 2/3";
        });
      },
      [&](const Tally&) { return ex2_detail; });

  timed(
      8, "zero-value boundary exactness",
      [&] {
        return guarded([&](Tally& t) {
          for (bool third : {false, true}) {
            const MstProblem problem(bt::zero_value_multigraph(third));
            const auto ends = boundary_solutions(problem, problem.bounds());
            t.check(ends.zero_f2 && ends.zero_f2->image == CostPair{1, 0}, "record (1,0)");
            t.check(ends.zero_f1 && ends.zero_f1->image == CostPair{0, 1}, "record (0,1)");
          }
          const MstProblem problem(bt::zero_value_multigraph(true));
          const auto all = oracle::enumerate_all(problem);
          const auto set = extended_pareto(problem, Epsilon(Rational{1}));
          t.check(all.size() == 3 && oracle::verify_pareto_coverage(set, all, 3, 3),
                  "extended curve covers all three trees within (3,3)");
        });
      },
      [](const Tally&) {
        return std::string("f2 = 0 and f1 = 0 exactly at the boundary weights; (3,3) coverage");
      });

  timed(
      9, "vertex-cover composite factor",
      [&] {
        return guarded([&](Tally& t) {
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            if (c.instance.kind != ProblemKind::vc) continue;
            for (const auto& b : c.budgets) {
              const auto opt = oracle::exact_opt_budget(c.all, b);
              for (const auto& e : epsilons()) {
                const BudgetResult r = solve_budget_sweep(*c.problem, BudgetQuery(b, e));
                const Rational f1_factor = Rational{2} * (e.value() * 2 + 1);
                const Rational f2_factor = Rational{2} * (Rational{2} / e.value() + 1);
                t.check(opt && r.solution && r.certificate.budget_factor == f1_factor &&
                            r.certificate.cost_factor == f2_factor &&
                            r.solution->image.f1 <= f1_factor * b &&
                            r.solution->image.f2 <= f2_factor * *opt,
                        label(idx, c, b, e));
              }
            }
          }
        });
      },
      [](const Tally&) { return std::string("factors (2(1+2eps), 2(1+2/eps))"); });

  timed(
      10, "oracle self-consistency",
      [&] {
        return guarded([&](Tally& t) {
          bt::Rng rng(kSuiteSeed + 10);
          for (std::size_t idx = 0; idx < cases.size(); ++idx) {
            const Case& c = cases[idx];
            if (!is_exact_kind(c)) continue;
            for (int k = 0; k < 25; ++k) {
              const Rational gamma = bt::random_gamma(rng);
              const SolutionRecord rec = c.problem->solve_weighted_sum(Weight(gamma));
              t.check(rec.image.f1 + gamma * rec.image.f2 ==
                          oracle::min_weighted_value(c.all, Rational{1}, gamma),
                      label(idx, c) + " gamma=" + gamma.to_string());
            }
          }
        });
      },
      [](const Tally&) { return std::string("mst, path, cut: 25 random gamma per instance"); });

  const double total = std::chrono::duration<double>(clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", total);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << " in " << buf << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
