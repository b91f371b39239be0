#ifndef BICRIT_TYPES_HPP
#define BICRIT_TYPES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bicrit/rational.hpp"

namespace bicrit {

/// Image (f1(x), f2(x)) of a solution.
struct CostPair {
  Rational f1;
  Rational f2;

  friend bool operator==(const CostPair&, const CostPair&) = default;
};

/// True iff a is componentwise no worse than b and a != b.
bool dominates(const CostPair& a, const CostPair& b);

/// Positive lower and upper bounds on each objective over all feasible
/// solutions (over the strictly positive values only, for relaxed instances).
struct Bounds {
  Rational lb1;
  Rational ub1;
  Rational lb2;
  Rational ub2;

  /// Throws InvalidArgument unless 0 < lb_i <= ub_i.
  void check() const;
  bool contains(const CostPair& image, bool positive_only = false) const;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Accuracy parameter, 0 < value <= 1.
class Epsilon {
 public:
  explicit Epsilon(Rational value);
  const Rational& value() const { return value_; }
  /// 1 + epsilon, the ratio between consecutive grid weights.
  Rational base() const { return value_ + 1; }

 private:
  Rational value_;
};

/// Weight gamma > 0 on the second objective in f1 + gamma * f2.
class Weight {
 public:
  explicit Weight(Rational gamma);
  const Rational& gamma() const { return gamma_; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  Rational gamma_;
};

/// Problem-specific solution encoding. Every plugin uses a list of
/// indices: edge ids (trees, paths in walk order), source-side node ids
/// (cuts) or vertex ids (covers).
using Token = std::vector<int>;

struct SolutionRecord {
  Token token;
  CostPair image;
  std::optional<Weight> produced_at;  // absent for brute-force records
};

/// Records the (budget, cost) factors an algorithm run guarantees.
struct GuaranteeCertificate {
  Rational alpha{1};
  Rational budget_factor{1};
  Rational cost_factor{1};
  Rational budget{1};
  std::size_t oracle_calls = 0;
};

/// Inclusive range of exponents i for the weights (1+eps)^i.
struct IndexRange {
  std::int64_t i_min = 0;
  std::int64_t i_max = 0;

  std::int64_t size() const { return i_max - i_min + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Exactly (1 + eps)^i.
Rational pow_one_plus_eps(const Epsilon& eps, std::int64_t i);

/// Largest i with base^i <= x. Requires base > 1 and x > 0.
std::int64_t floor_log(const Rational& base, const Rational& x);
/// Smallest i with base^i >= x. Requires base > 1 and x > 0.
std::int64_t ceil_log(const Rational& base, const Rational& x);

/// Integer exponents bracketing [lo, hi]: floor_log(lo) .. ceil_log(hi).
IndexRange bracket(const Epsilon& eps, const Rational& lo, const Rational& hi);

}  // namespace bicrit

#endif  // BICRIT_TYPES_HPP
