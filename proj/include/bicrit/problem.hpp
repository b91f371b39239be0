#ifndef BICRIT_PROBLEM_HPP
#define BICRIT_PROBLEM_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bicrit/rational.hpp"
#include "bicrit/types.hpp"

namespace bicrit {

/// constant + slope * gamma. Quantities inside a parametric run are sums
/// of these, so they stay linear in gamma.
struct LinearValue {
  Rational constant;
  Rational slope;

  Rational at(const Rational& gamma) const { return constant + slope * gamma; }

  LinearValue& operator+=(const LinearValue& o) {
    constant += o.constant;
    slope += o.slope;
    return *this;
  }
  friend LinearValue operator+(LinearValue a, const LinearValue& b) { return a += b; }
  friend bool operator==(const LinearValue&, const LinearValue&) = default;
};

/// Orders two linear values; the parametric driver decides what "at
/// which gamma" means.
using LinearComparator =
    std::function<std::weak_ordering(const LinearValue&, const LinearValue&)>;

/// Compares by value at a fixed gamma.
LinearComparator compare_at(Rational gamma);
/// Compares by value at gamma + d for all sufficiently small d > 0:
/// value at gamma first, then slope.
LinearComparator compare_right_of(Rational gamma);

/// Half-open range of weights over which one solution is optimal.
/// lo == 0 means the range starts just above zero; an empty hi means
/// the range is unbounded above.
struct ParametricPiece {
  Rational lo;
  std::optional<Rational> hi;
  SolutionRecord record;
};

/// Adapter contract every bicriteria problem plugin implements. A Problem
/// owns its instance; all members are const and reentrant.
class Problem {
 public:
  virtual ~Problem() = default;

  /// Short plugin name, e.g. "mst".
  virtual std::string kind() const = 0;
  /// True when zero objective values are admitted.
  virtual bool relaxed() const = 0;

  /// Exact image of a feasible token. Throws InfeasibleToken otherwise.
  virtual CostPair evaluate(const Token& token) const = 0;

  /// A token whose value w1*f1 + w2*f2 is within alpha() of the minimum.
  /// Requires w1, w2 >= 0, not both zero.
  virtual Token solve_scaled(const Rational& w1, const Rational& w2) const = 0;

  virtual Bounds bounds() const = 0;
  virtual Rational alpha() const = 0;

  /// Weighted-sum oracle for f1 + gamma * f2.
  SolutionRecord solve_weighted_sum(const Weight& gamma) const;

  bool exact() const { return alpha() == 1; }
};

/// Extension for exact plugins whose algorithm touches gamma only through
/// additions, constant multiplications and comparisons of linear values.
class ParametricProblem : public Problem {
 public:
  /// Runs the weighted-sum algorithm symbolically, routing every
  /// comparison between gamma-dependent values through `compare`.
  virtual Token parametric_run(const LinearComparator& compare) const = 0;

  /// Solutions for every gamma > 0 at once, as consecutive pieces
  /// covering (0, inf). Throws NotParametricCapable by default.
  virtual std::vector<ParametricPiece> parametric_all() const;

  /// The solution optimal just to the right of gamma (ties at gamma
  /// broken toward smaller f2).
  SolutionRecord solve_right_of(const Rational& gamma) const;
};

}  // namespace bicrit

#endif  // BICRIT_PROBLEM_HPP
