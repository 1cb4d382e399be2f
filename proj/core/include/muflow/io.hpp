#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "muflow/graph.hpp"
#include "muflow/realization.hpp"
#include "muflow/solution.hpp"

namespace muflow {

// An instance together with the external names of its objects. Internal ids
// are positions in the name lists.
class Instance {
 public:
  Instance() = default;
  Instance(Network net, RealizationTree real,
           std::vector<std::string> vertex_names,
           std::vector<std::string> arc_names,
           std::vector<std::string> tree_vertex_names);

  // Names every object after its numeric id.
  static Instance with_default_names(Network net, RealizationTree real);

  const Network& net() const { return net_; }
  const RealizationTree& real() const { return real_; }

  const std::string& vertex_name(VertexId v) const;
  const std::string& arc_name(ArcId a) const;
  const std::string& tree_vertex_name(TreeVertexId v) const;

  // Throw InputError(kDanglingReference) for unknown names.
  VertexId vertex(const std::string& name) const;
  ArcId arc(const std::string& name) const;
  TreeVertexId tree_vertex(const std::string& name) const;

  // Same names, different lengths (edges matched by id).
  Instance with_tree(RealizationTree real) const;

 private:
  Network net_;
  RealizationTree real_;
  std::unordered_map<std::int64_t, std::string> vertex_names_;
  std::unordered_map<std::int64_t, std::string> arc_names_;
  std::unordered_map<std::int64_t, std::string> tree_vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_ids_;
  std::unordered_map<std::string, ArcId> arc_ids_;
  std::unordered_map<std::string, TreeVertexId> tree_vertex_ids_;
};

// JSON instance document:
//   {"graph": {"vertices": [...], "arcs": [{"id", "tail", "head", "cap"}]},
//    "terminals": [...],
//    "tree": {"vertices": [...], "edges": [{"u", "v", "len_uv", "len_vu"}]},
//    "subtrees": {"<terminal>": [tree vertices]}}
// Lengths are "p/q" or integer strings. Errors are InputError with a code per
// failure class and the offending field in the message.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

struct ResultDocument {
  Rational value;
  std::optional<WeightedPathCollection> paths;
  Certificate certificate;
  SolveStats stats;
};

std::string serialize_result(const Instance& instance, const SolveOutput& out,
                             bool include_paths = true);
ResultDocument parse_result(const Instance& instance, std::string_view text);

}  // namespace muflow
