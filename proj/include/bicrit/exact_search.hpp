#ifndef BICRIT_EXACT_SEARCH_HPP
#define BICRIT_EXACT_SEARCH_HPP

#include <optional>

#include "bicrit/problem.hpp"
#include "bicrit/sweep.hpp"

namespace bicrit {

/// Binary search over the sweep grid. Relies on f1 of exact answers
/// being nondecreasing (and f2 nonincreasing) in the grid index.
/// Guarantee (1+2eps, 1+2/eps) with at most floor(log2(grid)) + 1 calls.
/// Throws ExactOracleRequired for alpha > 1.
BudgetResult solve_budget_binary(const Problem& problem, const BudgetQuery& query);

/// The unique gamma with p(gamma) = q(gamma), or nothing when the slopes
/// agree and the comparison does not depend on gamma.
std::optional<Rational> critical_gamma(const LinearValue& p, const LinearValue& q);

enum class Side {
  left,   ///< keep the part of the interval below the critical value
  right,  ///< keep the part above it
};

struct Resolution {
  Side side;
  GammaInterval interval;
  std::optional<SolutionRecord> probe;  ///< set when the oracle was consulted
};

/// Decides on which side of `gamma_crit` the search continues. A critical
/// value outside the open interval is settled by position alone. Inside,
/// the oracle answer x' just right of gamma_crit decides: f1(x') >
/// (1+eps)B keeps [lo, gamma_crit], otherwise [gamma_crit, hi].
/// Throws ExactOracleRequired for alpha > 1.
Resolution resolve_comparison(const ParametricProblem& problem, const GammaInterval& interval,
                              const Rational& gamma_crit, const Rational& budget,
                              const Epsilon& eps);

/// Megiddo-style parametric search. Runs the plugin's algorithm over
/// linear values starting from [eps*B/UB2, eps*B/LB2], resolving every
/// gamma-dependent comparison with resolve_comparison, then queries the
/// oracle once at the midpoint of the final interval.
/// Guarantee (1+eps, 1+1/eps). Throws ExactOracleRequired or
/// NotParametricCapable.
BudgetResult solve_budget_parametric(const Problem& problem, const BudgetQuery& query);

}  // namespace bicrit

#endif  // BICRIT_EXACT_SEARCH_HPP
