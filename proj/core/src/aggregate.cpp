#include "flow_util.hpp"
#include "muflow/solver.hpp"

namespace muflow {

namespace {

// Joins the parts of the flow crossing the boundary in one direction: `near`
// ends at the contraction vertex of the source side, `far` starts at the one
// of the sink side. Boundary arcs appear in both and are counted once.
FlowFunction join(const Network& net, const FlowFunction& near,
                  const FlowFunction& far,
                  const std::function<bool(const Arc&)>& crossing,
                  const std::function<bool(const Arc&)>& reverse) {
  const Digraph& g = net.graph();
  FlowFunction joined = near;
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    if (reverse(a)) {
      MUFLOW_ENSURE(near[a.id] == 0 && far[a.id] == 0,
                    "flow crosses the partition boundary backwards");
    }
    if (!crossing(a)) continue;
    MUFLOW_ENSURE(
        near[a.id] == net.capacity_at(i) && far[a.id] == net.capacity_at(i),
        "partition boundary arc " + std::to_string(a.id.value()) +
            " is not saturated on both sides");
  }
  for (const auto& [id, x] : far.values()) {
    if (!crossing(g.arc(g.arc_index(id)))) joined.add(id, x);
  }
  return joined;
}

}  // namespace

Multiflow aggregate(const Network& net, std::span<const VertexId> x1,
                    VertexId z1, VertexId z2, const Multiflow& f1,
                    const Multiflow& f2) {
  const Digraph& g = net.graph();
  const std::vector<char> side1 = vertex_mask(g, x1);
  auto in1 = [&](VertexId v) { return side1[g.vertex_index(v)] != 0; };
  auto forward = [&](const Arc& a) { return in1(a.tail) && !in1(a.head); };
  auto backward = [&](const Arc& a) { return !in1(a.tail) && in1(a.head); };

  Multiflow out;
  for (const auto& [pair, flow] : f1.components()) {
    if (pair.first != z2 && pair.second != z2) {
      out.add(pair.first, pair.second, flow);
    }
  }
  for (const auto& [pair, flow] : f2.components()) {
    if (pair.first != z1 && pair.second != z1) {
      out.add(pair.first, pair.second, flow);
    }
  }

  std::vector<VertexId> terminals1;
  std::vector<VertexId> terminals2;
  for (VertexId s : net.terminals()) {
    (in1(s) ? terminals1 : terminals2).push_back(s);
  }

  using internal::sum_components;
  const FlowFunction to_z2 =
      sum_components(f1, [&](VertexId, VertexId t) { return t == z2; });
  const FlowFunction from_z1 =
      sum_components(f2, [&](VertexId s, VertexId) { return s == z1; });
  const FlowFunction to_z1 =
      sum_components(f2, [&](VertexId, VertexId t) { return t == z1; });
  const FlowFunction from_z2 =
      sum_components(f1, [&](VertexId s, VertexId) { return s == z2; });

  out.add_paths(decompose(net, join(net, to_z2, from_z1, forward, backward),
                          terminals1, terminals2));
  out.add_paths(decompose(net, join(net, to_z1, from_z2, backward, forward),
                          terminals2, terminals1));
  return out;
}

}  // namespace muflow
