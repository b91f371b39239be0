#ifndef BICRIT_SWEEP_HPP
#define BICRIT_SWEEP_HPP

#include <optional>
#include <vector>

#include "bicrit/problem.hpp"
#include "bicrit/types.hpp"

namespace bicrit {

/// Budget B > 0 on the first objective together with the accuracy eps.
struct BudgetQuery {
  BudgetQuery(Rational budget, Epsilon eps);

  Rational budget;
  Epsilon eps;
};

/// Final interval of a parametric search run.
struct GammaInterval {
  GammaInterval(Rational lo, Rational hi);

  Rational lo;
  Rational hi;

  bool contains_strictly(const Rational& g) const { return lo < g && g < hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Outcome of a budget-constrained run. `solution` is empty when no
/// queried record met the budget bound (the no-certificate case); the
/// transcript then holds every oracle answer for inspection. An empty
/// solution does not prove that the budget is infeasible.
struct BudgetResult {
  std::optional<SolutionRecord> solution;
  GuaranteeCertificate certificate;
  std::vector<SolutionRecord> transcript;
  IndexRange grid;
  std::size_t comparisons = 0;                ///< parametric runs only
  std::optional<GammaInterval> final_interval;  ///< parametric runs only

  bool certified() const { return solution.has_value(); }
};

/// i_min = floor(log_{1+eps}(eps*B/UB2)), i_max = ceil(log_{1+eps}(eps*B/LB2)),
/// computed by exact comparisons of powers.
IndexRange index_range(const Epsilon& eps, const Rational& budget, const Bounds& bounds);

/// Oracle answers at gamma = (1+eps)^i for every i in `range`, in index
/// order. With `parallel` the calls run on separate threads.
std::vector<SolutionRecord> evaluate_grid(const Problem& problem, const Epsilon& eps,
                                          const IndexRange& range, bool parallel = false);

/// Bicriteria (alpha(1+2eps), alpha(1+2/eps)) approximation: queries the
/// whole grid and returns, among answers with f1 <= alpha(1+2eps)B, the
/// one with least f2 (then least f1, then earliest index).
BudgetResult solve_budget_sweep(const Problem& problem, const BudgetQuery& query,
                                bool parallel = false);

/// The sweep with eps = 1, i.e. a (3 alpha, 3 alpha) approximation.
BudgetResult solve_budget_fixed(const Problem& problem, const Rational& budget,
                                bool parallel = false);

}  // namespace bicrit

#endif  // BICRIT_SWEEP_HPP
