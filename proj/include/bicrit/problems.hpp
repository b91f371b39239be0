#ifndef BICRIT_PROBLEMS_HPP
#define BICRIT_PROBLEMS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bicrit/problem.hpp"
#include "bicrit/types.hpp"

namespace bicrit {

struct GraphEdge {
  int u = 0;
  int v = 0;
  CostPair w;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Undirected multigraph with a cost pair on every edge. Parallel edges
/// and (ignored) self-loops are allowed.
struct BiweightedGraph {
  int node_count = 0;
  std::vector<GraphEdge> edges;
  std::optional<int> source;
  std::optional<int> sink;
  bool relaxed = false;

  friend bool operator==(const BiweightedGraph&, const BiweightedGraph&) = default;
};

struct VertexWeightedGraph {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<CostPair> vertex_weights;
  bool relaxed = false;

  friend bool operator==(const VertexWeightedGraph&, const VertexWeightedGraph&) = default;
};

/// Throws ValidationError for negative weights, or zero weights when
/// `relaxed` is false. `where` prefixes the message.
void validate_weight(const CostPair& w, bool relaxed, const std::string& where);

/// Bicriteria minimum spanning tree. Kruskal on w1 + gamma*w2 with ties
/// broken by edge index.
class MstProblem final : public ParametricProblem {
 public:
  /// Throws ValidationError / DisconnectedGraph.
  explicit MstProblem(BiweightedGraph graph);

  const BiweightedGraph& graph() const { return graph_; }

  std::string kind() const override { return "mst"; }
  bool relaxed() const override { return graph_.relaxed; }
  CostPair evaluate(const Token& token) const override;
  Token solve_scaled(const Rational& w1, const Rational& w2) const override;
  Bounds bounds() const override;
  Rational alpha() const override { return Rational{1}; }

  Token parametric_run(const LinearComparator& compare) const override;
  std::vector<ParametricPiece> parametric_all() const override;

 private:
  BiweightedGraph graph_;
};

/// Bicriteria shortest s-t path on the undirected graph. The token lists
/// edge ids in walk order from source to sink.
class ShortestPathProblem final : public ParametricProblem {
 public:
  /// Requires graph.source and graph.sink; throws Unreachable when no
  /// s-t path exists.
  explicit ShortestPathProblem(BiweightedGraph graph);

  const BiweightedGraph& graph() const { return graph_; }
  int source() const { return *graph_.source; }
  int sink() const { return *graph_.sink; }

  std::string kind() const override { return "path"; }
  bool relaxed() const override { return graph_.relaxed; }
  CostPair evaluate(const Token& token) const override;
  Token solve_scaled(const Rational& w1, const Rational& w2) const override;
  Bounds bounds() const override;
  Rational alpha() const override { return Rational{1}; }

  Token parametric_run(const LinearComparator& compare) const override;

 private:
  BiweightedGraph graph_;
};

/// Bicriteria minimum s-t cut on the undirected graph. The token is the
/// sorted source side; the returned side is the inclusion-minimal one.
class MinCutProblem final : public Problem {
 public:
  explicit MinCutProblem(BiweightedGraph graph);

  const BiweightedGraph& graph() const { return graph_; }
  int source() const { return *graph_.source; }
  int sink() const { return *graph_.sink; }

  std::string kind() const override { return "cut"; }
  bool relaxed() const override { return graph_.relaxed; }
  CostPair evaluate(const Token& token) const override;
  Token solve_scaled(const Rational& w1, const Rational& w2) const override;
  Bounds bounds() const override;
  Rational alpha() const override { return Rational{1}; }

 private:
  BiweightedGraph graph_;
};

/// Bicriteria minimum-weight vertex cover with the local-ratio
/// 2-approximation as weighted-sum oracle.
class VertexCoverProblem final : public Problem {
 public:
  explicit VertexCoverProblem(VertexWeightedGraph graph);

  const VertexWeightedGraph& graph() const { return graph_; }

  std::string kind() const override { return "vc"; }
  bool relaxed() const override { return graph_.relaxed; }
  CostPair evaluate(const Token& token) const override;
  Token solve_scaled(const Rational& w1, const Rational& w2) const override;
  Bounds bounds() const override;
  Rational alpha() const override { return Rational{2}; }

 private:
  VertexWeightedGraph graph_;
};

/// A scripted answer: when asked for weight gamma, return `token`.
struct ScriptedAnswer {
  Rational gamma;
  Token token;
};

/// Wraps an exact plugin and answers each weighted-sum query with the
/// worst alpha-legal solution: among candidates whose weighted value is at
/// most alpha times the optimum, the one with the largest f1, then the
/// largest f2, then the lowest candidate index. Scripted answers override
/// the policy for specific weights and must themselves be alpha-legal.
class AdversarialProblem final : public Problem {
 public:
  AdversarialProblem(std::shared_ptr<const Problem> inner, Rational alpha,
                     std::vector<SolutionRecord> candidates,
                     std::vector<ScriptedAnswer> script = {});

  const Problem& inner() const { return *inner_; }
  const std::vector<SolutionRecord>& candidates() const { return candidates_; }

  std::string kind() const override { return inner_->kind(); }
  bool relaxed() const override { return inner_->relaxed(); }
  CostPair evaluate(const Token& token) const override { return inner_->evaluate(token); }
  Token solve_scaled(const Rational& w1, const Rational& w2) const override;
  Bounds bounds() const override { return inner_->bounds(); }
  Rational alpha() const override { return alpha_; }

 private:
  std::shared_ptr<const Problem> inner_;
  Rational alpha_;
  std::vector<SolutionRecord> candidates_;
  std::vector<ScriptedAnswer> script_;
};

// Free-function forms of the plugin oracles.

SolutionRecord mst_oracle(const BiweightedGraph& graph, const Weight& gamma);
SolutionRecord sp_oracle(const BiweightedGraph& graph, int s, int t, const Weight& gamma);
SolutionRecord cut_oracle(const BiweightedGraph& graph, int s, int t, const Weight& gamma);
SolutionRecord vc_oracle(const VertexWeightedGraph& graph, const Weight& gamma);

/// All solutions of the MST weighted-sum problem over gamma in (0, inf).
std::vector<ParametricPiece> mst_parametric_all(const BiweightedGraph& graph);
/// Kruskal with every edge comparison routed through `compare`.
Token mst_parametric_run(const BiweightedGraph& graph, const LinearComparator& compare);

/// Builds the adversarial wrapper; candidates come from brute-force
/// enumeration of `exact`. Throws InvalidArgument if alpha < 1.
std::shared_ptr<const AdversarialProblem> adversarial_wrap(
    std::shared_ptr<const Problem> exact, const Rational& alpha,
    std::vector<ScriptedAnswer> script = {});

}  // namespace bicrit

#endif  // BICRIT_PROBLEMS_HPP
