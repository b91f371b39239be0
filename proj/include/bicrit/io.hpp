#ifndef BICRIT_IO_HPP
#define BICRIT_IO_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "bicrit/problem.hpp"
#include "bicrit/problems.hpp"

namespace bicrit {

enum class ProblemKind { mst, path, cut, vc };

std::string to_string(ProblemKind kind);
/// Throws InvalidArgument for names other than mst, path, cut, vc.
ProblemKind parse_problem_kind(std::string_view name);

/// A parsed instance file. `graph` is used by mst/path/cut,
/// `vertex_graph` by vc.
struct Instance {
  ProblemKind kind = ProblemKind::mst;
  BiweightedGraph graph;
  VertexWeightedGraph vertex_graph;

  bool relaxed() const { return kind == ProblemKind::vc ? vertex_graph.relaxed : graph.relaxed; }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Parses the JSON instance format:
///   {"kind": "mst"|"path"|"cut"|"vc", "relaxed": bool, "nodes": n,
///    "edges": [{"u": int, "v": int, "w1": "p/q", "w2": "p/q"}, ...],
///    "source": int, "sink": int,                       (path, cut)
///    "vertex_weights": [{"w1": "p/q", "w2": "p/q"}, ...]}   (vc)
/// Vertex-cover edges carry no weights. Throws ParseError for malformed
/// input and ValidationError when the instance breaks a structural or
/// positivity precondition; messages name the offending field.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);

/// Canonical JSON text; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const Instance& instance);

/// 16 hex digits of FNV-1a over the canonical serialization.
std::string instance_digest(const Instance& instance);

std::shared_ptr<const Problem> make_problem(const Instance& instance);

}  // namespace bicrit

#endif  // BICRIT_IO_HPP
