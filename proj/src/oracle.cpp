#include "bicrit/oracle.hpp"

#include <algorithm>
#include <functional>

#include "bicrit/errors.hpp"
#include "bicrit/problems.hpp"

namespace bicrit::oracle {

namespace {

class Collector {
 public:
  explicit Collector(const EnumerationCap& cap) : cap_(cap) {}

  void add(Token token, CostPair image) {
    if (out_.size() >= cap_.max_solutions) {
      throw CapExceeded("enumeration exceeds " + std::to_string(cap_.max_solutions) +
                        " solutions");
    }
    out_.push_back(SolutionRecord{std::move(token), std::move(image), std::nullopt});
  }
  std::vector<SolutionRecord> take() { return std::move(out_); }

 private:
  EnumerationCap cap_;
  std::vector<SolutionRecord> out_;
};

void check_nodes(int node_count, const EnumerationCap& cap) {
  if (node_count > cap.max_nodes) {
    throw CapExceeded("instance has " + std::to_string(node_count) + " nodes, cap is " +
                      std::to_string(cap.max_nodes));
  }
}

CostPair edge_sum(const BiweightedGraph& g, const Token& edges) {
  CostPair c{0, 0};
  for (int e : edges) {
    c.f1 += g.edges[e].w.f1;
    c.f2 += g.edges[e].w.f2;
  }
  return c;
}

// component labels; merging relabels, which is fine at these sizes
using Labels = std::vector<int>;

bool merge(Labels& labels, int a, int b) {
  const int la = labels[a];
  const int lb = labels[b];
  if (la == lb) return false;
  for (int& l : labels) {
    if (l == lb) l = la;
  }
  return true;
}

bool spans(Labels labels, const BiweightedGraph& g, std::size_t from) {
  for (std::size_t i = from; i < g.edges.size(); ++i) merge(labels, g.edges[i].u, g.edges[i].v);
  return std::all_of(labels.begin(), labels.end(), [&](int l) { return l == labels[0]; });
}

void spanning_trees(const BiweightedGraph& g, Collector& out) {
  const auto needed = static_cast<std::size_t>(g.node_count - 1);
  Labels start(static_cast<std::size_t>(g.node_count));
  for (int v = 0; v < g.node_count; ++v) start[v] = v;
  Token picked;
  std::function<void(std::size_t, const Labels&)> rec = [&](std::size_t idx, const Labels& labels) {
    if (picked.size() == needed) {
      out.add(picked, edge_sum(g, picked));
      return;
    }
    if (idx == g.edges.size()) return;
    const auto& e = g.edges[idx];
    Labels with = labels;
    if (merge(with, e.u, e.v)) {
      picked.push_back(static_cast<int>(idx));
      rec(idx + 1, with);
      picked.pop_back();
    }
    if (spans(labels, g, idx + 1)) rec(idx + 1, labels);
  };
  if (spans(start, g, 0)) rec(0, start);
}

void simple_paths(const BiweightedGraph& g, int s, int t, Collector& out) {
  std::vector<char> seen(static_cast<std::size_t>(g.node_count), 0);
  Token walk;
  std::function<void(int)> dfs = [&](int at) {
    if (at == t) {
      out.add(walk, edge_sum(g, walk));
      return;
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const auto& e = g.edges[i];
      if (e.u == e.v || (e.u != at && e.v != at)) continue;
      const int next = e.u == at ? e.v : e.u;
      if (seen[next]) continue;
      seen[next] = 1;
      walk.push_back(static_cast<int>(i));
      dfs(next);
      walk.pop_back();
      seen[next] = 0;
    }
  };
  seen[s] = 1;
  dfs(s);
}

void st_cuts(const BiweightedGraph& g, int s, int t, Collector& out) {
  std::vector<int> free_nodes;
  for (int v = 0; v < g.node_count; ++v) {
    if (v != s && v != t) free_nodes.push_back(v);
  }
  const std::size_t subsets = std::size_t{1} << free_nodes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<char> side(static_cast<std::size_t>(g.node_count), 0);
    side[s] = 1;
    for (std::size_t j = 0; j < free_nodes.size(); ++j) {
      if (mask >> j & 1U) side[free_nodes[j]] = 1;
    }
    Token token;
    for (int v = 0; v < g.node_count; ++v) {
      if (side[v]) token.push_back(v);
    }
    CostPair c{0, 0};
    for (const auto& e : g.edges) {
      if (side[e.u] != side[e.v]) {
        c.f1 += e.w.f1;
        c.f2 += e.w.f2;
      }
    }
    out.add(std::move(token), std::move(c));
  }
}

void vertex_covers(const VertexWeightedGraph& g, Collector& out) {
  const std::size_t subsets = std::size_t{1} << g.node_count;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const bool covers = std::all_of(g.edges.begin(), g.edges.end(), [mask](const auto& e) {
      return (mask >> e.first & 1U) || (mask >> e.second & 1U);
    });
    if (!covers) continue;
    Token token;
    CostPair c{0, 0};
    for (int v = 0; v < g.node_count; ++v) {
      if (mask >> v & 1U) {
        token.push_back(v);
        c.f1 += g.vertex_weights[v].f1;
        c.f2 += g.vertex_weights[v].f2;
      }
    }
    out.add(std::move(token), std::move(c));
  }
}

}  // namespace

std::vector<SolutionRecord> enumerate_all(const Problem& problem, const EnumerationCap& cap) {
  if (const auto* adv = dynamic_cast<const AdversarialProblem*>(&problem)) {
    return enumerate_all(adv->inner(), cap);
  }
  Collector out(cap);
  if (const auto* p = dynamic_cast<const MstProblem*>(&problem)) {
    check_nodes(p->graph().node_count, cap);
    spanning_trees(p->graph(), out);
  } else if (const auto* p = dynamic_cast<const ShortestPathProblem*>(&problem)) {
    check_nodes(p->graph().node_count, cap);
    simple_paths(p->graph(), p->source(), p->sink(), out);
  } else if (const auto* p = dynamic_cast<const MinCutProblem*>(&problem)) {
    check_nodes(p->graph().node_count, cap);
    st_cuts(p->graph(), p->source(), p->sink(), out);
  } else if (const auto* p = dynamic_cast<const VertexCoverProblem*>(&problem)) {
    check_nodes(p->graph().node_count, cap);
    vertex_covers(p->graph(), out);
  } else {
    throw InvalidArgument("enumerate_all: no enumerator for plugin '" + problem.kind() + "'");
  }
  return out.take();
}

std::optional<Rational> exact_opt_budget(std::span<const SolutionRecord> all,
                                         const Rational& budget) {
  std::optional<Rational> best;
  for (const auto& r : all) {
    if (r.image.f1 <= budget && (!best || r.image.f2 < *best)) best = r.image.f2;
  }
  return best;
}

std::optional<Rational> exact_opt_budget(const Problem& problem, const Rational& budget,
                                         const EnumerationCap& cap) {
  const auto all = enumerate_all(problem, cap);
  return exact_opt_budget(all, budget);
}

ParetoSet exact_pareto(std::span<const SolutionRecord> all) {
  ParetoSet set;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < all.size() && keep; ++j) {
      if (j == i) continue;
      const bool dominated = all[j].image.f1 <= all[i].image.f1 &&
                             all[j].image.f2 <= all[i].image.f2 && all[j].image != all[i].image;
      const bool earlier_duplicate = j < i && all[j].image == all[i].image;
      keep = !dominated && !earlier_duplicate;
    }
    if (keep) set.records.push_back(all[i]);
  }
  std::stable_sort(set.records.begin(), set.records.end(), [](const auto& a, const auto& b) {
    return a.image.f1 < b.image.f1;
  });
  return set;
}

ParetoSet exact_pareto(const Problem& problem, const EnumerationCap& cap) {
  const auto all = enumerate_all(problem, cap);
  return exact_pareto(all);
}

Rational min_weighted_value(std::span<const SolutionRecord> all, const Rational& w1,
                            const Rational& w2) {
  if (all.empty()) throw NoFeasibleSolution("min_weighted_value: no solutions");
  Rational best = w1 * all[0].image.f1 + w2 * all[0].image.f2;
  for (const auto& r : all.subspan(1)) best = min(best, w1 * r.image.f1 + w2 * r.image.f2);
  return best;
}

Rational budget_factor(const Epsilon& eps, const Rational& alpha, FactorRule rule) {
  const Rational slack = rule == FactorRule::sweep ? eps.value() * 2 : eps.value();
  return alpha * (slack + 1);
}

Rational cost_factor(const Epsilon& eps, const Rational& alpha, FactorRule rule) {
  const Rational numerator = rule == FactorRule::sweep ? Rational{2} : Rational{1};
  return alpha * (numerator / eps.value() + 1);
}

bool verify_budget(const SolutionRecord& result, const Rational& budget, const Epsilon& eps,
                   const Rational& alpha, const Rational& opt, FactorRule rule) {
  return result.image.f1 <= budget_factor(eps, alpha, rule) * budget &&
         result.image.f2 <= cost_factor(eps, alpha, rule) * opt;
}

bool verify_pareto_coverage(std::span<const SolutionRecord> approx,
                            std::span<const SolutionRecord> all, const Rational& a,
                            const Rational& b) {
  return std::all_of(all.begin(), all.end(), [&](const SolutionRecord& x) {
    const Rational f1_limit = a * x.image.f1;
    const Rational f2_limit = b * x.image.f2;
    return std::any_of(approx.begin(), approx.end(), [&](const SolutionRecord& y) {
      return y.image.f1 <= f1_limit && y.image.f2 <= f2_limit;
    });
  });
}

bool verify_pareto_coverage(const ParetoSet& approx, std::span<const SolutionRecord> all,
                            const Rational& a, const Rational& b) {
  return verify_pareto_coverage(approx.records, all, a, b);
}

}  // namespace bicrit::oracle
