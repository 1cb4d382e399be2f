#include "flow_util.hpp"

#include <algorithm>

namespace muflow::internal {

Network without_arcs(const Network& net,
                     const std::function<bool(const Arc&)>& drop) {
  std::vector<ArcSpec> specs = net.arc_specs();
  const Digraph& g = net.graph();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (drop(g.arc(g.arc_index(specs[i].id)))) specs[i].capacity = 0;
  }
  const auto vs = g.vertices();
  const auto ts = net.terminals();
  return Network(std::vector<VertexId>(vs.begin(), vs.end()), std::move(specs),
                 std::vector<VertexId>(ts.begin(), ts.end()));
}

FlowFunction complement(const Network& net, const FlowFunction& f) {
  FlowFunction out;
  const Digraph& g = net.graph();
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const ArcId a = g.arc(i).id;
    out.set(a, net.capacity_at(i) - f[a]);
  }
  return out;
}

FlowFunction restrict_to(const Network& net, const FlowFunction& f,
                         const std::function<bool(const Arc&)>& keep) {
  FlowFunction out;
  const Digraph& g = net.graph();
  for (const auto& [a, x] : f.values()) {
    if (keep(g.arc(g.arc_index(a)))) out.set(a, x);
  }
  return out;
}

std::vector<VertexId> complement_set(const Digraph& g,
                                     std::span<const VertexId> x) {
  const std::vector<char> mask = vertex_mask(g, x);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    if (!mask[i]) out.push_back(g.vertex(i));
  }
  return out;
}

Cut expand_cut(const Cut& cut, VertexId z, std::span<const VertexId> preimage) {
  std::vector<VertexId> side;
  for (VertexId v : cut.source_side()) {
    if (v == z) {
      side.insert(side.end(), preimage.begin(), preimage.end());
    } else {
      side.push_back(v);
    }
  }
  return Cut(std::move(side));
}

FlowFunction sum_components(
    const Multiflow& f, const std::function<bool(VertexId, VertexId)>& pick) {
  FlowFunction out;
  for (const auto& [pair, flow] : f.components()) {
    if (pick(pair.first, pair.second)) out.add(flow);
  }
  return out;
}

}  // namespace muflow::internal
