#include "muflow/solution.hpp"

namespace muflow {

const FlowFunction* Multiflow::find(VertexId s, VertexId t) const {
  auto it = components_.find({s, t});
  return it == components_.end() ? nullptr : &it->second;
}

void Multiflow::add(VertexId s, VertexId t, const FlowFunction& f) {
  MUFLOW_ENSURE(s != t, "multiflow component needs distinct endpoints");
  if (f.empty()) return;
  auto& slot = components_[{s, t}];
  slot.add(f);
  if (slot.empty()) components_.erase({s, t});
}

void Multiflow::add_path(const WeightedPath& path) {
  MUFLOW_ENSURE(path.from != path.to, "path endpoints must differ");
  if (path.weight == 0) return;
  auto& slot = components_[{path.from, path.to}];
  for (ArcId a : path.arcs) slot.add(a, path.weight);
}

void Multiflow::add_paths(const WeightedPathCollection& paths) {
  for (const auto& p : paths) add_path(p);
}

FlowFunction Multiflow::arc_sum() const {
  FlowFunction sum;
  for (const auto& [pair, f] : components_) sum.add(f);
  return sum;
}

Capacity Multiflow::value_of(const Network& net, const FlowFunction& f,
                             VertexId s) {
  return divergence(net, f, s);
}

WeightedPathCollection to_paths(const Network& net, const Multiflow& f) {
  WeightedPathCollection out;
  for (const auto& [pair, flow] : f.components()) {
    const VertexId src[] = {pair.first};
    const VertexId dst[] = {pair.second};
    auto paths = decompose(net, flow, src, dst);
    out.insert(out.end(), std::make_move_iterator(paths.begin()),
               std::make_move_iterator(paths.end()));
  }
  return out;
}

}  // namespace muflow
