#include "generators.hpp"

#include <algorithm>
#include <numeric>

namespace bicrit::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

CostPair random_pair(Rng& rng) { return CostPair{random_weight(rng), random_weight(rng)}; }

}  // namespace

Rational random_weight(Rng& rng) { return Rational(uniform(rng, 1, 9), uniform(rng, 1, 4)); }

Rational random_gamma(Rng& rng) { return Rational(uniform(rng, 1, 60), uniform(rng, 1, 20)); }

BiweightedGraph random_connected_graph(Rng& rng, int nodes, int extra) {
  BiweightedGraph g;
  g.node_count = nodes;
  std::vector<int> order(static_cast<std::size_t>(nodes));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < nodes; ++i) {
    const int parent = order[static_cast<std::size_t>(uniform(rng, 0, i - 1))];
    g.edges.push_back(GraphEdge{parent, order[static_cast<std::size_t>(i)], random_pair(rng)});
  }
  for (int k = 0; k < extra && nodes > 1; ++k) {
    const int u = uniform(rng, 0, nodes - 1);
    int v = uniform(rng, 0, nodes - 2);
    if (v >= u) ++v;
    g.edges.push_back(GraphEdge{u, v, random_pair(rng)});
  }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

Instance random_mst(Rng& rng) {
  const int n = uniform(rng, 2, 7);
  Instance inst;
  inst.kind = ProblemKind::mst;
  inst.graph = random_connected_graph(rng, n, uniform(rng, 0, n + 1));
  return inst;
}

Instance random_path(Rng& rng) {
  const int n = uniform(rng, 2, 8);
  Instance inst;
  inst.kind = ProblemKind::path;
  inst.graph = random_connected_graph(rng, n, uniform(rng, 0, n + 2));
  inst.graph.source = 0;
  inst.graph.sink = n - 1;
  return inst;
}

Instance random_cut(Rng& rng) {
  const int n = uniform(rng, 2, 8);
  Instance inst;
  inst.kind = ProblemKind::cut;
  inst.graph = random_connected_graph(rng, n, uniform(rng, 0, n + 2));
  inst.graph.source = 0;
  inst.graph.sink = n - 1;
  return inst;
}

Instance random_vc(Rng& rng) {
  const int n = uniform(rng, 2, 10);
  Instance inst;
  inst.kind = ProblemKind::vc;
  auto& g = inst.vertex_graph;
  g.node_count = n;
  for (int v = 0; v < n; ++v) g.vertex_weights.push_back(random_pair(rng));
  const int m = uniform(rng, 1, std::min(2 * n, n * (n - 1) / 2));
  for (int k = 0; k < m; ++k) {
    const int u = uniform(rng, 0, n - 1);
    int v = uniform(rng, 0, n - 2);
    if (v >= u) ++v;
    g.edges.emplace_back(u, v);
  }
  return inst;
}

std::vector<Instance> instance_suite(std::uint64_t seed, int per_kind) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (int i = 0; i < per_kind; ++i) {
    out.push_back(random_mst(rng));
    out.push_back(random_path(rng));
    out.push_back(random_cut(rng));
    out.push_back(random_vc(rng));
  }
  return out;
}

BiweightedGraph zero_value_multigraph(bool third) {
  BiweightedGraph g;
  g.node_count = 2;
  g.relaxed = true;
  g.edges = {{0, 1, {1, 0}}, {0, 1, {0, 1}}};
  if (third) g.edges.push_back({0, 1, {1, 1}});
  return g;
}

}  // namespace bicrit::testing
