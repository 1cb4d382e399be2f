#pragma once

#include <functional>
#include <span>
#include <vector>

#include "muflow/graph.hpp"
#include "muflow/maxflow.hpp"
#include "muflow/solution.hpp"

namespace muflow::internal {

// Same network with the capacity of every arc satisfying `drop` set to zero.
Network without_arcs(const Network& net,
                     const std::function<bool(const Arc&)>& drop);

// c - f on every arc of net.
FlowFunction complement(const Network& net, const FlowFunction& f);

// f restricted to arcs satisfying `keep`.
FlowFunction restrict_to(const Network& net, const FlowFunction& f,
                         const std::function<bool(const Arc&)>& keep);

// V - x.
std::vector<VertexId> complement_set(const Digraph& g,
                                     std::span<const VertexId> x);

// Replaces, in every cut, the vertex z by the vertices of `preimage`.
Cut expand_cut(const Cut& cut, VertexId z, std::span<const VertexId> preimage);

// Sum of the components (s, t) selected by `pick`.
FlowFunction sum_components(
    const Multiflow& f, const std::function<bool(VertexId, VertexId)>& pick);

}  // namespace muflow::internal
