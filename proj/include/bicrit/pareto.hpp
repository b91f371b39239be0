#ifndef BICRIT_PARETO_HPP
#define BICRIT_PARETO_HPP

#include <optional>
#include <span>
#include <vector>

#include "bicrit/problem.hpp"
#include "bicrit/types.hpp"

namespace bicrit {

/// Mutually nondominated solutions, sorted by increasing f1, together with
/// the (factor1, factor2) approximate-coverage guarantee they carry.
struct ParetoSet {
  std::vector<SolutionRecord> records;
  Rational factor1{1};
  Rational factor2{1};
  std::size_t oracle_calls = 0;
};

/// Exponents bracketing [eps*LB1/UB2, eps*UB1/LB2].
IndexRange pareto_index_range(const Epsilon& eps, const Bounds& bounds);

/// Keeps every record not dominated by another; of several records with
/// the same image only the first survives. Input order is preserved.
std::vector<SolutionRecord> filter_dominated(std::span<const SolutionRecord> records);

/// Weighted-sum grid over pareto_index_range, union of the answers,
/// dominated records removed. Guarantee (alpha(1+2eps), alpha(1+2/eps)).
ParetoSet approximate_pareto(const Problem& problem, const Epsilon& eps, bool parallel = false);

/// Every solution of the plugin's all-gamma parametric algorithm.
/// Guarantee (alpha(1+eps), alpha(1+1/eps)). Throws NotParametricCapable.
ParetoSet pareto_from_parametric(const Problem& problem, const Epsilon& eps);

/// Evidence for the zero-component ends of a relaxed instance's curve.
struct BoundarySolutions {
  std::optional<SolutionRecord> zero_f2;  ///< image (a, 0) with f1 <= alpha*a
  std::optional<SolutionRecord> zero_f1;  ///< image (0, b) with f2 <= alpha*b
  Rational gamma_high;
  Rational gamma_low;
};

/// Queries the oracle at gamma_high = 2*alpha*UB1/LB2 and
/// gamma_low = LB1/(2*alpha*UB2). A slot is empty when the returned
/// record has a nonzero value in the respective component.
BoundarySolutions boundary_solutions(const Problem& problem, const Bounds& bounds);

/// approximate_pareto plus the boundary records; for relaxed instances.
ParetoSet extended_pareto(const Problem& problem, const Epsilon& eps, bool parallel = false);

}  // namespace bicrit

#endif  // BICRIT_PARETO_HPP
