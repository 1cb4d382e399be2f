#pragma once

#include <span>
#include <vector>

#include "muflow/graph.hpp"

namespace muflow {

using FlowFunction = ArcFunction;

struct WeightedPath {
  VertexId from;
  VertexId to;
  std::vector<ArcId> arcs;
  Capacity weight = 0;

  friend bool operator==(const WeightedPath&, const WeightedPath&) = default;
};

using WeightedPathCollection = std::vector<WeightedPath>;

// Sum of path weights per arc.
FlowFunction to_arc_function(const WeightedPathCollection& paths);

struct MaxFlowResult {
  FlowFunction flow;
  Capacity value = 0;
};

// Integer maximum flow from a source set to a sink set (blocking flows on BFS
// level graphs, super source/sink internally). Throws InputError when the sets
// are empty or intersect.
MaxFlowResult max_flow(const Network& net, std::span<const VertexId> sources,
                       std::span<const VertexId> sinks);

// Vertices reachable from `sources` in the residual graph of f. For a maximum
// flow this is the inclusion-minimal minimum cut. Throws ContractViolation if
// a sink is reachable (f was not maximum).
Cut min_cut_source_side(const Network& net, const FlowFunction& f,
                        std::span<const VertexId> sources,
                        std::span<const VertexId> sinks);

// Maximum flow from `source` into {primary_sink} + secondary_sinks that, among
// all maximum flows, maximizes the inflow at primary_sink. Computed in two
// phases: max flow into primary_sink, then augmentation towards all sinks.
// No flow ever leaves primary_sink.
FlowFunction lex_max_flow(const Network& net, VertexId source,
                          VertexId primary_sink,
                          std::span<const VertexId> secondary_sinks);

// Peels f into simple weighted paths from vertices of positive divergence
// (which must lie in allowed_sources) to vertices of negative divergence
// (which must lie in allowed_sinks). At every vertex the lowest-id positive
// arc is followed; closed walks met on the way are discarded.
WeightedPathCollection decompose(const Network& net, const FlowFunction& f,
                                 std::span<const VertexId> allowed_sources,
                                 std::span<const VertexId> allowed_sinks);

// Number of max-flow computations performed by this thread so far. Used for
// solver statistics.
std::int64_t maxflow_call_count();

}  // namespace muflow
