#ifndef BICRIT_MARATHE_HPP
#define BICRIT_MARATHE_HPP

#include <optional>
#include <vector>

#include "bicrit/problem.hpp"
#include "bicrit/problems.hpp"
#include "bicrit/types.hpp"

/// An older integer parametric search for budgeted
/// problems, and the two instances on which it fails.
namespace bicrit::marathe {

/// Triangle on nodes 0, 1, 2 with edges (0,1) = (3,1), (1,2) = (1,3),
/// (0,2) = (1,1).
BiweightedGraph example1_graph();
/// Triangle with edges (0,1) = (2,1), (1,2) = (2,1), (0,2) = (1,2).
BiweightedGraph example2_graph();

struct TraceEntry {
  Rational d;
  Rational h;
  SolutionRecord record;
};

struct MaratheParams {
  Rational budget;
  Rational eps;  ///< any eps > 0; not restricted to (0, 1]
  Rational ub2;
};

struct MaratheTrace {
  std::vector<TraceEntry> tested;
  std::optional<SolutionRecord> solution;
  MaratheParams params;
  Rational alpha{1};

  bool no_solution() const { return !solution.has_value(); }
};

/// h(D): value of the oracle's answer under (D/B)*f1 + f2. For D = 0 the
/// objective is f2 alone.
TraceEntry h_value(const Problem& problem, const Rational& d, const Rational& budget);

/// Binary search over integers D in [0, floor(eps*ub2)] for the largest D
/// with h(D)/D > alpha(1+eps) (true at D = 0 by convention), followed by
/// the check h(D+1)/(D+1) <= alpha(1+eps). On success the answer at D+1
/// is returned; otherwise the trace reports no solution.
MaratheTrace marathe_search(const Problem& problem, const MaratheParams& params);

struct Example1Report {
  std::vector<TraceEntry> adversarial;  ///< h at D = 3 and D = 4 under the 5/4 adversary
  std::vector<TraceEntry> exact;        ///< the same probes with the exact oracle
  MaratheTrace search;                  ///< full search under the adversary
  Rational ratio3_adversarial;
  Rational ratio4_adversarial;
  Rational ratio3_exact;
  Rational ratio4_exact;

  /// h(3)/3 < h(4)/4 under the adversary, h(3)/3 >= h(4)/4 when exact.
  bool reproduced() const {
    return ratio3_adversarial < ratio4_adversarial && ratio3_exact >= ratio4_exact;
  }
};

/// B = 2, eps = 1, UB2 = 4, adversary answering D = 3 with x2 = {(1,2),(0,2)}
/// and D = 4 with x1 = {(0,1),(0,2)}.
Example1Report reproduce_example1();

struct Example2Report {
  MaratheTrace trace;
  std::optional<Rational> opt_at_budget;  ///< brute-force OPT(B)
  std::vector<SolutionRecord> feasible;   ///< trees with f1 <= B

  bool reproduced() const { return trace.no_solution() && opt_at_budget.has_value(); }
};

/// B = 3, eps = 2/3, UB2 = 3, exact MST oracle.
Example2Report reproduce_example2();

}  // namespace bicrit::marathe

#endif  // BICRIT_MARATHE_HPP
