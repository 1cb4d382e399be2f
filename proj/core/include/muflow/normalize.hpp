#pragma once

#include <map>
#include <optional>
#include <vector>

#include "muflow/graph.hpp"
#include "muflow/realization.hpp"
#include "muflow/solution.hpp"

namespace muflow {

// Hands out ids that are fresh with respect to one instance and everything
// derived from it.
class IdPool {
 public:
  static IdPool after(const Network& net, const RealizationTree& real);

  VertexId vertex() { return VertexId(next_vertex_++); }
  ArcId arc() { return ArcId(next_arc_++); }
  TreeVertexId tree_vertex() { return TreeVertexId(next_tree_vertex_++); }
  TreeEdgeId tree_edge() { return TreeEdgeId(next_tree_edge_++); }

 private:
  std::int64_t next_vertex_ = 0;
  std::int64_t next_arc_ = 0;
  std::int64_t next_tree_vertex_ = 0;
  std::int64_t next_tree_edge_ = 0;
};

// A linear terminal s replaced by two simple terminals. Flow that used to end
// at s now continues over inflow_arc into inflow_terminal; flow that used to
// start at s comes from outflow_terminal over outflow_arc.
struct LinearSplit {
  VertexId terminal;
  VertexId inflow_terminal;
  VertexId outflow_terminal;
  ArcId inflow_arc;
  ArcId outflow_arc;
};

// Where an original tree edge ended up: the reduced edge, and whether the
// original u -> v arc is the reduced v -> u arc.
struct EdgeImage {
  TreeEdgeId edge;
  bool reversed = false;
};

struct NormalizationUndo {
  std::vector<LinearSplit> splits;
  // Keyed by original edge id; nullopt for edges deleted with a bare leaf.
  std::map<TreeEdgeId, std::optional<EdgeImage>> edge_images;
};

struct ReducedInstance {
  Network net;
  RealizationTree real;
  NormalizationUndo undo;
};

// Throws ContractViolation unless s is linear.
ReducedInstance split_linear_terminal(const Network& net,
                                      const RealizationTree& real, VertexId s,
                                      IdPool& ids);

// Applies the initial reductions to a fixed point: prune bare leaves, split
// linear terminals, move simple terminals off inner vertices, split vertices
// of degree >= 4 and merge degree-2 vertices that no subtree ends at.
ReducedInstance normalize(const Network& net, const RealizationTree& real,
                          IdPool& ids);
ReducedInstance normalize(const Network& net, const RealizationTree& real);

// Reduced arc corresponding to an original tree arc, if it survived.
std::optional<TreeArc> arc_image(const NormalizationUndo& undo,
                                 const RealizationTree& original,
                                 const RealizationTree& reduced,
                                 TreeArc original_arc);

// Maps a multiflow of the reduced network back onto the original network:
// split arcs are dropped and s1 / s2 endpoints renamed to s.
Multiflow pull_back_multiflow(const NormalizationUndo& undo,
                              const Multiflow& reduced);

// Re-expresses a certificate over the original tree arcs and vertices. Arcs
// with an empty pair set are omitted.
Certificate pull_back_certificate(const NormalizationUndo& undo,
                                  const Network& original_net,
                                  const RealizationTree& original,
                                  const RealizationTree& reduced,
                                  const Certificate& cert);

}  // namespace muflow
