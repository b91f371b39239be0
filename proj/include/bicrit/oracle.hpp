#ifndef BICRIT_ORACLE_HPP
#define BICRIT_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bicrit/pareto.hpp"
#include "bicrit/problem.hpp"
#include "bicrit/types.hpp"

/// Brute-force ground truth for small instances. Nothing here calls a
/// plugin's weighted-sum oracle.
namespace bicrit::oracle {

struct EnumerationCap {
  std::size_t max_solutions = 100000;
  int max_nodes = 12;
};

/// Every feasible solution exactly once, with its image. Supports the
/// mst, path, cut and vc plugins (and adversarial wrappers around them).
/// Throws CapExceeded, or InvalidArgument for unknown plugin types.
std::vector<SolutionRecord> enumerate_all(const Problem& problem, const EnumerationCap& cap = {});

/// min f2 over solutions with f1 <= budget; empty when none qualifies.
std::optional<Rational> exact_opt_budget(std::span<const SolutionRecord> all, const Rational& budget);
std::optional<Rational> exact_opt_budget(const Problem& problem, const Rational& budget,
                                         const EnumerationCap& cap = {});

/// Nondominated subset (duplicate images collapsed to the first), factors (1,1).
ParetoSet exact_pareto(std::span<const SolutionRecord> all);
ParetoSet exact_pareto(const Problem& problem, const EnumerationCap& cap = {});

/// min over `all` of w1*f1 + w2*f2.
Rational min_weighted_value(std::span<const SolutionRecord> all, const Rational& w1,
                            const Rational& w2);

enum class FactorRule {
  sweep,       ///< (alpha(1+2eps), alpha(1+2/eps))
  parametric,  ///< (alpha(1+eps), alpha(1+1/eps))
};

Rational budget_factor(const Epsilon& eps, const Rational& alpha, FactorRule rule);
Rational cost_factor(const Epsilon& eps, const Rational& alpha, FactorRule rule);

/// f1 <= budget_factor * budget and f2 <= cost_factor * opt.
bool verify_budget(const SolutionRecord& result, const Rational& budget, const Epsilon& eps,
                   const Rational& alpha, const Rational& opt, FactorRule rule = FactorRule::sweep);

/// Every record of `all` is (a, b)-covered by some record of `approx`.
bool verify_pareto_coverage(std::span<const SolutionRecord> approx,
                            std::span<const SolutionRecord> all, const Rational& a,
                            const Rational& b);
bool verify_pareto_coverage(const ParetoSet& approx, std::span<const SolutionRecord> all,
                            const Rational& a, const Rational& b);

}  // namespace bicrit::oracle

#endif  // BICRIT_ORACLE_HPP
