#include "bicrit/problems.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "bicrit/errors.hpp"
#include "bicrit/oracle.hpp"

namespace bicrit {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string at_edge(std::size_t i) { return "edges[" + std::to_string(i) + "]"; }

void check_node(int node, int node_count, const std::string& where) {
  if (node < 0 || node >= node_count) {
    throw ValidationError(where + ": node id " + std::to_string(node) + " out of range [0, " +
                          std::to_string(node_count) + ")");
  }
}

void validate_biweighted(const BiweightedGraph& g) {
  if (g.node_count <= 0) throw ValidationError("nodes: node count must be positive");
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    check_node(e.u, g.node_count, at_edge(i));
    check_node(e.v, g.node_count, at_edge(i));
    validate_weight(e.w, g.relaxed, at_edge(i));
  }
  if (g.source) check_node(*g.source, g.node_count, "source");
  if (g.sink) check_node(*g.sink, g.node_count, "sink");
}

void require_terminals(const BiweightedGraph& g, const std::string& kind) {
  if (!g.source || !g.sink) throw ValidationError(kind + ": source and sink are required");
  if (*g.source == *g.sink) throw ValidationError(kind + ": source and sink must differ");
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const BiweightedGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.node_count));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    if (e.u == e.v) continue;
    adj[e.u].emplace_back(static_cast<int>(i), e.v);
    adj[e.v].emplace_back(static_cast<int>(i), e.u);
  }
  return adj;
}

bool connected(const BiweightedGraph& g, int from, int to) {
  DisjointSets ds(g.node_count);
  for (const auto& e : g.edges) ds.unite(e.u, e.v);
  return ds.find(from) == ds.find(to);
}

std::vector<Rational> combined_weights(const std::vector<GraphEdge>& edges, const Rational& w1,
                                       const Rational& w2) {
  std::vector<Rational> c;
  c.reserve(edges.size());
  for (const auto& e : edges) c.push_back(w1 * e.w.f1 + w2 * e.w.f2);
  return c;
}

void check_scaling(const Rational& w1, const Rational& w2) {
  if (w1.sign() < 0 || w2.sign() < 0 || (w1.is_zero() && w2.is_zero())) {
    throw InvalidArgument("objective scalings must be nonnegative and not both zero");
  }
}

// lb = count * (smallest positive value), ub = sum. Dimensions without any
// positive value get the vacuous bounds [1, 1].
std::pair<Rational, Rational> positive_range(const std::vector<Rational>& values, long count) {
  std::optional<Rational> smallest;
  Rational total{0};
  for (const auto& v : values) {
    total += v;
    if (v.is_positive() && (!smallest || v < *smallest)) smallest = v;
  }
  if (!smallest) return {Rational{1}, Rational{1}};
  Rational lb = *smallest * Rational{count};
  return {lb, max(lb, total)};
}

Bounds edge_bounds(const std::vector<GraphEdge>& edges, long count) {
  std::vector<Rational> v1, v2;
  for (const auto& e : edges) {
    v1.push_back(e.w.f1);
    v2.push_back(e.w.f2);
  }
  auto [lb1, ub1] = positive_range(v1, count);
  auto [lb2, ub2] = positive_range(v2, count);
  return Bounds{lb1, ub1, lb2, ub2};
}

template <class Less>
Token kruskal(const BiweightedGraph& g, Less less) {
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), less);
  DisjointSets ds(g.node_count);
  Token tree;
  const auto needed = static_cast<std::size_t>(g.node_count - 1);
  for (int e : order) {
    if (tree.size() == needed) break;
    if (ds.unite(g.edges[e].u, g.edges[e].v)) tree.push_back(e);
  }
  if (tree.size() != needed) throw DisconnectedGraph("mst: graph is not connected");
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Label-setting search over any value type closed under +, with a strict
// order given by `less`. Ties go to the lower node index / earlier edge.
template <class Value, class EdgeValue, class Less>
Token dijkstra(const BiweightedGraph& g, int s, int t, EdgeValue edge_value, Less less) {
  const auto adj = adjacency(g);
  const auto n = static_cast<std::size_t>(g.node_count);
  std::vector<std::optional<Value>> dist(n);
  std::vector<int> pred(n, -1);
  std::vector<char> done(n, 0);
  dist[s] = Value{};
  for (;;) {
    int u = -1;
    for (int v = 0; v < g.node_count; ++v) {
      if (done[v] || !dist[v]) continue;
      if (u < 0 || less(*dist[v], *dist[u])) u = v;
    }
    if (u < 0 || u == t) break;
    done[u] = 1;
    for (const auto& [e, v] : adj[u]) {
      if (done[v]) continue;
      Value candidate = *dist[u] + edge_value(e);
      if (!dist[v] || less(candidate, *dist[v])) {
        dist[v] = std::move(candidate);
        pred[v] = e;
      }
    }
  }
  if (!dist[t]) throw Unreachable("path: sink not reachable from source");
  Token path;
  for (int v = t; v != s;) {
    const int e = pred[v];
    path.push_back(e);
    const auto& edge = g.edges[e];
    v = edge.u == v ? edge.v : edge.u;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

Token sorted_unique(const Token& token, int limit, const std::string& what) {
  Token t = token;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end()) {
    throw InfeasibleToken(what + ": repeated index");
  }
  if (!t.empty() && (t.front() < 0 || t.back() >= limit)) {
    throw InfeasibleToken(what + ": index out of range");
  }
  return t;
}

}  // namespace

void validate_weight(const CostPair& w, bool relaxed, const std::string& where) {
  for (const Rational* v : {&w.f1, &w.f2}) {
    if (v->sign() < 0) throw ValidationError(where + ": negative weight " + v->to_string());
    if (v->is_zero() && !relaxed) {
      throw ValidationError(where + ": zero weight requires the relaxed regime");
    }
  }
}

// ---------------------------------------------------------------- MST

MstProblem::MstProblem(BiweightedGraph graph) : graph_(std::move(graph)) {
  validate_biweighted(graph_);
  if (graph_.node_count < 2 && !graph_.relaxed) {
    throw ValidationError("mst: at least two nodes are needed for positive tree costs");
  }
  DisjointSets ds(graph_.node_count);
  int components = graph_.node_count;
  for (const auto& e : graph_.edges) {
    if (ds.unite(e.u, e.v)) --components;
  }
  if (components != 1) throw DisconnectedGraph("mst: graph is not connected");
}

CostPair MstProblem::evaluate(const Token& token) const {
  const Token t = sorted_unique(token, static_cast<int>(graph_.edges.size()), "mst");
  if (t.size() != static_cast<std::size_t>(graph_.node_count - 1)) {
    throw InfeasibleToken("mst: a spanning tree has node_count - 1 edges");
  }
  DisjointSets ds(graph_.node_count);
  CostPair image{0, 0};
  for (int e : t) {
    const auto& edge = graph_.edges[e];
    if (!ds.unite(edge.u, edge.v)) throw InfeasibleToken("mst: edge set contains a cycle");
    image.f1 += edge.w.f1;
    image.f2 += edge.w.f2;
  }
  return image;
}

Token MstProblem::solve_scaled(const Rational& w1, const Rational& w2) const {
  check_scaling(w1, w2);
  const auto c = combined_weights(graph_.edges, w1, w2);
  return kruskal(graph_, [&c](int a, int b) { return c[a] < c[b]; });
}

Bounds MstProblem::bounds() const {
  return edge_bounds(graph_.edges, graph_.relaxed ? 1 : graph_.node_count - 1);
}

Token MstProblem::parametric_run(const LinearComparator& compare) const {
  return mst_parametric_run(graph_, compare);
}

std::vector<ParametricPiece> MstProblem::parametric_all() const {
  std::set<Rational> breakpoints;
  const auto& edges = graph_.edges;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Rational ds = edges[a].w.f2 - edges[b].w.f2;
      if (ds.is_zero()) continue;
      const Rational gamma = (edges[b].w.f1 - edges[a].w.f1) / ds;
      if (gamma.is_positive()) breakpoints.insert(gamma);
    }
  }
  std::vector<Rational> cuts(breakpoints.begin(), breakpoints.end());

  std::vector<ParametricPiece> pieces;
  auto add = [&](Rational lo, std::optional<Rational> hi, const Rational& sample) {
    SolutionRecord rec = solve_weighted_sum(Weight(sample));
    if (!pieces.empty() && pieces.back().record.token == rec.token) {
      pieces.back().hi = std::move(hi);
      return;
    }
    pieces.push_back(ParametricPiece{std::move(lo), std::move(hi), std::move(rec)});
  };
  if (cuts.empty()) {
    add(Rational{0}, std::nullopt, Rational{1});
    return pieces;
  }
  add(Rational{0}, cuts.front(), cuts.front() / 2);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    add(cuts[i], cuts[i + 1], (cuts[i] + cuts[i + 1]) / 2);
  }
  add(cuts.back(), std::nullopt, cuts.back() + 1);
  return pieces;
}

// ---------------------------------------------------------- shortest path

ShortestPathProblem::ShortestPathProblem(BiweightedGraph graph) : graph_(std::move(graph)) {
  validate_biweighted(graph_);
  require_terminals(graph_, "path");
  if (!connected(graph_, *graph_.source, *graph_.sink)) {
    throw Unreachable("path: sink not reachable from source");
  }
}

CostPair ShortestPathProblem::evaluate(const Token& token) const {
  if (token.empty()) throw InfeasibleToken("path: empty edge sequence");
  std::vector<char> seen(static_cast<std::size_t>(graph_.node_count), 0);
  int at = source();
  seen[at] = 1;
  CostPair image{0, 0};
  for (int e : token) {
    if (e < 0 || e >= static_cast<int>(graph_.edges.size())) {
      throw InfeasibleToken("path: edge index out of range");
    }
    const auto& edge = graph_.edges[e];
    if (edge.u != at && edge.v != at) throw InfeasibleToken("path: edges do not form a walk");
    at = edge.u == at ? edge.v : edge.u;
    if (seen[at]) throw InfeasibleToken("path: walk revisits a node");
    seen[at] = 1;
    image.f1 += edge.w.f1;
    image.f2 += edge.w.f2;
  }
  if (at != sink()) throw InfeasibleToken("path: walk does not end at the sink");
  return image;
}

Token ShortestPathProblem::solve_scaled(const Rational& w1, const Rational& w2) const {
  check_scaling(w1, w2);
  const auto c = combined_weights(graph_.edges, w1, w2);
  return dijkstra<Rational>(
      graph_, source(), sink(), [&c](int e) { return c[e]; },
      [](const Rational& a, const Rational& b) { return a < b; });
}

Bounds ShortestPathProblem::bounds() const { return edge_bounds(graph_.edges, 1); }

Token ShortestPathProblem::parametric_run(const LinearComparator& compare) const {
  return dijkstra<LinearValue>(
      graph_, source(), sink(),
      [this](int e) { return LinearValue{graph_.edges[e].w.f1, graph_.edges[e].w.f2}; },
      [&compare](const LinearValue& a, const LinearValue& b) { return compare(a, b) < 0; });
}

// ---------------------------------------------------------------- min cut

MinCutProblem::MinCutProblem(BiweightedGraph graph) : graph_(std::move(graph)) {
  validate_biweighted(graph_);
  require_terminals(graph_, "cut");
  if (!graph_.relaxed && !connected(graph_, *graph_.source, *graph_.sink)) {
    throw ValidationError("cut: source and sink are disconnected, so the empty cut has zero cost");
  }
}

CostPair MinCutProblem::evaluate(const Token& token) const {
  const Token t = sorted_unique(token, graph_.node_count, "cut");
  std::vector<char> side(static_cast<std::size_t>(graph_.node_count), 0);
  for (int v : t) side[v] = 1;
  if (!side[source()]) throw InfeasibleToken("cut: source side must contain the source");
  if (side[sink()]) throw InfeasibleToken("cut: source side must not contain the sink");
  CostPair image{0, 0};
  for (const auto& e : graph_.edges) {
    if (side[e.u] != side[e.v]) {
      image.f1 += e.w.f1;
      image.f2 += e.w.f2;
    }
  }
  return image;
}

Token MinCutProblem::solve_scaled(const Rational& w1, const Rational& w2) const {
  check_scaling(w1, w2);
  const auto cap = combined_weights(graph_.edges, w1, w2);
  // arc 2e runs u->v and arc 2e+1 runs v->u; both carry the edge capacity
  std::vector<Rational> residual;
  std::vector<int> head;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(graph_.node_count));
  for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
    const auto& e = graph_.edges[i];
    const int a = static_cast<int>(residual.size());
    residual.push_back(cap[i]);
    residual.push_back(e.u == e.v ? Rational{0} : cap[i]);
    head.push_back(e.v);
    head.push_back(e.u);
    out[e.u].push_back(a);
    out[e.v].push_back(a + 1);
  }
  const int s = source();
  const int t = sink();
  auto bfs = [&](std::vector<int>& via) {
    via.assign(static_cast<std::size_t>(graph_.node_count), -1);
    std::vector<char> seen(static_cast<std::size_t>(graph_.node_count), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a : out[u]) {
        const int v = head[a];
        if (seen[v] || !residual[a].is_positive()) continue;
        seen[v] = 1;
        via[v] = a;
        queue.push_back(v);
      }
    }
    return seen;
  };
  std::vector<int> via;
  for (;;) {
    const auto seen = bfs(via);
    if (!seen[t]) {
      Token side;
      for (int v = 0; v < graph_.node_count; ++v) {
        if (seen[v]) side.push_back(v);
      }
      return side;
    }
    Rational bottleneck = residual[via[t]];
    for (int v = t; v != s; v = head[via[v] ^ 1]) bottleneck = min(bottleneck, residual[via[v]]);
    for (int v = t; v != s; v = head[via[v] ^ 1]) {
      residual[via[v]] -= bottleneck;
      residual[via[v] ^ 1] += bottleneck;
    }
  }
}

Bounds MinCutProblem::bounds() const { return edge_bounds(graph_.edges, 1); }

// ----------------------------------------------------------- vertex cover

VertexCoverProblem::VertexCoverProblem(VertexWeightedGraph graph) : graph_(std::move(graph)) {
  if (graph_.node_count <= 0) throw ValidationError("nodes: node count must be positive");
  if (graph_.vertex_weights.size() != static_cast<std::size_t>(graph_.node_count)) {
    throw ValidationError("vertex_weights: expected one entry per node");
  }
  for (std::size_t i = 0; i < graph_.edges.size(); ++i) {
    check_node(graph_.edges[i].first, graph_.node_count, at_edge(i));
    check_node(graph_.edges[i].second, graph_.node_count, at_edge(i));
  }
  for (std::size_t v = 0; v < graph_.vertex_weights.size(); ++v) {
    validate_weight(graph_.vertex_weights[v], graph_.relaxed,
                    "vertex_weights[" + std::to_string(v) + "]");
  }
  if (graph_.edges.empty() && !graph_.relaxed) {
    throw ValidationError("vc: an edgeless graph has only the zero-cost empty cover");
  }
}

CostPair VertexCoverProblem::evaluate(const Token& token) const {
  const Token t = sorted_unique(token, graph_.node_count, "vc");
  std::vector<char> in(static_cast<std::size_t>(graph_.node_count), 0);
  CostPair image{0, 0};
  for (int v : t) {
    in[v] = 1;
    image.f1 += graph_.vertex_weights[v].f1;
    image.f2 += graph_.vertex_weights[v].f2;
  }
  for (const auto& [u, v] : graph_.edges) {
    if (!in[u] && !in[v]) throw InfeasibleToken("vc: an edge is left uncovered");
  }
  return image;
}

Token VertexCoverProblem::solve_scaled(const Rational& w1, const Rational& w2) const {
  check_scaling(w1, w2);
  std::vector<Rational> residual;
  residual.reserve(graph_.vertex_weights.size());
  for (const auto& w : graph_.vertex_weights) residual.push_back(w1 * w.f1 + w2 * w.f2);
  std::vector<char> touched(residual.size(), 0);
  for (const auto& [u, v] : graph_.edges) {
    touched[u] = touched[v] = 1;
    if (residual[u].is_zero() || residual[v].is_zero()) continue;
    if (u == v) {
      residual[u] = 0;
      continue;
    }
    const Rational d = min(residual[u], residual[v]);
    residual[u] -= d;
    residual[v] -= d;
  }
  Token cover;
  for (std::size_t v = 0; v < residual.size(); ++v) {
    if (touched[v] && residual[v].is_zero()) cover.push_back(static_cast<int>(v));
  }
  return cover;
}

Bounds VertexCoverProblem::bounds() const {
  std::vector<Rational> v1, v2;
  for (const auto& w : graph_.vertex_weights) {
    v1.push_back(w.f1);
    v2.push_back(w.f2);
  }
  auto [lb1, ub1] = positive_range(v1, 1);
  auto [lb2, ub2] = positive_range(v2, 1);
  return Bounds{lb1, ub1, lb2, ub2};
}

// ------------------------------------------------------------- adversary

AdversarialProblem::AdversarialProblem(std::shared_ptr<const Problem> inner, Rational alpha,
                                       std::vector<SolutionRecord> candidates,
                                       std::vector<ScriptedAnswer> script)
    : inner_(std::move(inner)),
      alpha_(std::move(alpha)),
      candidates_(std::move(candidates)),
      script_(std::move(script)) {
  if (!inner_) throw InvalidArgument("adversary: no inner problem");
  if (alpha_ < 1) throw InvalidArgument("adversary: alpha must be >= 1");
  if (candidates_.empty()) throw NoFeasibleSolution("adversary: no candidate solutions");
}

Token AdversarialProblem::solve_scaled(const Rational& w1, const Rational& w2) const {
  check_scaling(w1, w2);
  std::vector<Rational> value;
  value.reserve(candidates_.size());
  for (const auto& c : candidates_) value.push_back(w1 * c.image.f1 + w2 * c.image.f2);
  const Rational limit = alpha_ * *std::min_element(value.begin(), value.end());

  if (w1.is_positive()) {
    const Rational gamma = w2 / w1;
    for (const auto& entry : script_) {
      if (entry.gamma != gamma) continue;
      const CostPair image = inner_->evaluate(entry.token);
      if (w1 * image.f1 + w2 * image.f2 > limit) {
        throw InvalidArgument("adversary: scripted answer for gamma " + gamma.to_string() +
                              " is not alpha-legal");
      }
      return entry.token;
    }
  }

  std::size_t pick = candidates_.size();
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    if (value[i] > limit) continue;
    if (pick == candidates_.size()) {
      pick = i;
      continue;
    }
    const auto& a = candidates_[i].image;
    const auto& b = candidates_[pick].image;
    if (a.f1 > b.f1 || (a.f1 == b.f1 && a.f2 > b.f2)) pick = i;
  }
  return candidates_[pick].token;
}

// ------------------------------------------------------- free functions

SolutionRecord mst_oracle(const BiweightedGraph& graph, const Weight& gamma) {
  return MstProblem(graph).solve_weighted_sum(gamma);
}

SolutionRecord sp_oracle(const BiweightedGraph& graph, int s, int t, const Weight& gamma) {
  BiweightedGraph g = graph;
  g.source = s;
  g.sink = t;
  return ShortestPathProblem(std::move(g)).solve_weighted_sum(gamma);
}

SolutionRecord cut_oracle(const BiweightedGraph& graph, int s, int t, const Weight& gamma) {
  BiweightedGraph g = graph;
  g.source = s;
  g.sink = t;
  return MinCutProblem(std::move(g)).solve_weighted_sum(gamma);
}

SolutionRecord vc_oracle(const VertexWeightedGraph& graph, const Weight& gamma) {
  VertexWeightedGraph g = graph;
  // the oracle itself is defined for edgeless graphs too
  if (g.edges.empty()) g.relaxed = true;
  return VertexCoverProblem(std::move(g)).solve_weighted_sum(gamma);
}

std::vector<ParametricPiece> mst_parametric_all(const BiweightedGraph& graph) {
  return MstProblem(graph).parametric_all();
}

Token mst_parametric_run(const BiweightedGraph& graph, const LinearComparator& compare) {
  std::vector<LinearValue> lv;
  lv.reserve(graph.edges.size());
  for (const auto& e : graph.edges) lv.push_back(LinearValue{e.w.f1, e.w.f2});
  return kruskal(graph, [&](int a, int b) { return compare(lv[a], lv[b]) < 0; });
}

std::shared_ptr<const AdversarialProblem> adversarial_wrap(std::shared_ptr<const Problem> exact,
                                                           const Rational& alpha,
                                                           std::vector<ScriptedAnswer> script) {
  if (!exact) throw InvalidArgument("adversary: no inner problem");
  auto candidates = oracle::enumerate_all(*exact);
  return std::make_shared<const AdversarialProblem>(std::move(exact), alpha, std::move(candidates),
                                                    std::move(script));
}

}  // namespace bicrit
