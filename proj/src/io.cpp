#include "bicrit/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bicrit/errors.hpp"

namespace bicrit {

using nlohmann::json;

namespace {

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + key + ": missing field");
  return *it;
}

int read_int(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw ParseError(where + key + ": expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw ParseError(where + key + ": integer out of range");
  return static_cast<int>(x);
}

Rational read_rational(const json& obj, const std::string& key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) throw ParseError(where + key + R"(: expected a string "p/q")");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(where + key + ": " + e.what());
  }
}

CostPair read_pair(const json& obj, const std::string& where) {
  return CostPair{read_rational(obj, "w1", where), read_rational(obj, "w2", where)};
}

void check_node(int v, int n, const std::string& what) {
  if (v < 0 || v >= n) {
    throw ValidationError(what + ": node " + std::to_string(v) + " outside [0, " +
                          std::to_string(n) + ")");
  }
}

const json& read_array(const json& doc, const std::string& key) {
  const json& arr = field(doc, key, "");
  if (!arr.is_array()) throw ParseError(key + ": expected an array");
  return arr;
}

json pair_json(const CostPair& w) { return json{{"w1", w.f1.to_string()}, {"w2", w.f2.to_string()}}; }

}  // namespace

std::string to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::mst: return "mst";
    case ProblemKind::path: return "path";
    case ProblemKind::cut: return "cut";
    case ProblemKind::vc: return "vc";
  }
  return "?";
}

ProblemKind parse_problem_kind(std::string_view name) {
  if (name == "mst") return ProblemKind::mst;
  if (name == "path") return ProblemKind::path;
  if (name == "cut") return ProblemKind::cut;
  if (name == "vc") return ProblemKind::vc;
  throw InvalidArgument("unknown problem kind '" + std::string(name) + "'");
}

Instance parse_instance(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level: expected an object");

  Instance inst;
  const json& kind = field(doc, "kind", "");
  if (!kind.is_string()) throw ParseError("kind: expected a string");
  try {
    inst.kind = parse_problem_kind(kind.get<std::string>());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("kind: ") + e.what());
  }

  bool relaxed = false;
  if (auto it = doc.find("relaxed"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("relaxed: expected a boolean");
    relaxed = it->get<bool>();
  }
  const int n = read_int(doc, "nodes", "");
  if (n <= 0) throw ValidationError("nodes: must be positive");
  const json& edges = read_array(doc, "edges");

  if (inst.kind == ProblemKind::vc) {
    auto& g = inst.vertex_graph;
    g.node_count = n;
    g.relaxed = relaxed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "].";
      if (!edges[i].is_object()) throw ParseError(where + ": expected an object");
      const int u = read_int(edges[i], "u", where);
      const int v = read_int(edges[i], "v", where);
      check_node(u, n, where + "u");
      check_node(v, n, where + "v");
      g.edges.emplace_back(u, v);
    }
    const json& weights = read_array(doc, "vertex_weights");
    if (weights.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("vertex_weights: expected " + std::to_string(n) + " entries, got " +
                            std::to_string(weights.size()));
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const std::string where = "vertex_weights[" + std::to_string(i) + "].";
      if (!weights[i].is_object()) throw ParseError(where + ": expected an object");
      g.vertex_weights.push_back(read_pair(weights[i], where));
      validate_weight(g.vertex_weights.back(), relaxed, where.substr(0, where.size() - 1));
    }
  } else {
    auto& g = inst.graph;
    g.node_count = n;
    g.relaxed = relaxed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "].";
      if (!edges[i].is_object()) throw ParseError(where + ": expected an object");
      GraphEdge e;
      e.u = read_int(edges[i], "u", where);
      e.v = read_int(edges[i], "v", where);
      check_node(e.u, n, where + "u");
      check_node(e.v, n, where + "v");
      e.w = read_pair(edges[i], where);
      validate_weight(e.w, relaxed, where.substr(0, where.size() - 1));
      g.edges.push_back(std::move(e));
    }
    if (inst.kind != ProblemKind::mst) {
      g.source = read_int(doc, "source", "");
      g.sink = read_int(doc, "sink", "");
      check_node(*g.source, n, "source");
      check_node(*g.sink, n, "sink");
      if (*g.source == *g.sink) throw ValidationError("sink: must differ from source");
    }
  }
  make_problem(inst);  // structural checks (connectivity etc.)
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  const std::string prefix = path.string() + ": ";
  try {
    return parse_instance(text.str());
  } catch (const DisconnectedGraph& e) {
    throw DisconnectedGraph(prefix + e.what());
  } catch (const Unreachable& e) {
    throw Unreachable(prefix + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(prefix + e.what());
  } catch (const ParseError& e) {
    throw ParseError(prefix + e.what());
  }
}

std::string serialize_instance(const Instance& inst) {
  json doc;
  doc["kind"] = to_string(inst.kind);
  doc["relaxed"] = inst.relaxed();
  json edges = json::array();
  if (inst.kind == ProblemKind::vc) {
    const auto& g = inst.vertex_graph;
    doc["nodes"] = g.node_count;
    for (const auto& [u, v] : g.edges) edges.push_back(json{{"u", u}, {"v", v}});
    json weights = json::array();
    for (const auto& w : g.vertex_weights) weights.push_back(pair_json(w));
    doc["vertex_weights"] = std::move(weights);
  } else {
    const auto& g = inst.graph;
    doc["nodes"] = g.node_count;
    for (const auto& e : g.edges) {
      json je = pair_json(e.w);
      je["u"] = e.u;
      je["v"] = e.v;
      edges.push_back(std::move(je));
    }
    if (g.source) doc["source"] = *g.source;
    if (g.sink) doc["sink"] = *g.sink;
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : serialize_instance(instance)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::shared_ptr<const Problem> make_problem(const Instance& inst) {
  switch (inst.kind) {
    case ProblemKind::mst: return std::make_shared<const MstProblem>(inst.graph);
    case ProblemKind::path: return std::make_shared<const ShortestPathProblem>(inst.graph);
    case ProblemKind::cut: return std::make_shared<const MinCutProblem>(inst.graph);
    case ProblemKind::vc: return std::make_shared<const VertexCoverProblem>(inst.vertex_graph);
  }
  throw InvalidArgument("unknown problem kind");
}

}  // namespace bicrit
