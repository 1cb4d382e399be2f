#include <algorithm>

#include "flow_util.hpp"
#include "muflow/solver.hpp"

namespace muflow {

namespace {

using internal::complement;
using internal::complement_set;
using internal::restrict_to;
using internal::sum_components;

struct Leaf {
  TreeVertexId vertex;
  std::vector<VertexId> simple;  // simple terminals hosted by the leaf
  VertexId sigma;                // their representative after merging
};

// Re-expresses a multiflow of the merged network on the original one. Paths
// leaving or entering a merged vertex are attributed to the original terminal
// at the end of their first or last arc; a path through a merged vertex is
// cut there.
Multiflow unmerge(const Network& original, const Network& merged,
                  const Multiflow& f,
                  const std::set<VertexId>& merge_vertices) {
  if (merge_vertices.empty()) return f;
  const Digraph& g = original.graph();
  const Digraph& h = merged.graph();
  auto is_merged = [&](VertexId v) { return merge_vertices.contains(v); };
  Multiflow out;
  for (const auto& [pair, flow] : f.components()) {
    const VertexId src[] = {pair.first};
    const VertexId dst[] = {pair.second};
    for (const WeightedPath& p : decompose(merged, flow, src, dst)) {
      std::size_t begin = 0;
      for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        const VertexId head = h.arc(h.arc_index(p.arcs[i])).head;
        if (i + 1 < p.arcs.size() && !is_merged(head)) continue;
        const Arc& first = g.arc(g.arc_index(p.arcs[begin]));
        const Arc& last = g.arc(g.arc_index(p.arcs[i]));
        const VertexId from_merged = h.arc(h.arc_index(first.id)).tail;
        WeightedPath piece;
        piece.from = is_merged(from_merged) ? first.tail : from_merged;
        piece.to = is_merged(head) ? last.head : head;
        piece.arcs.assign(p.arcs.begin() + begin, p.arcs.begin() + i + 1);
        piece.weight = p.weight;
        if (piece.from != piece.to) out.add_path(piece);
        begin = i + 1;
      }
    }
  }
  return out;
}

}  // namespace

SubSolution base_three_leaves(const Network& net, const RealizationTree& real,
                              IdPool& ids) {
  MUFLOW_ENSURE(real.vertices().size() == 4, "expected a star with 3 leaves");
  TreeVertexId center;
  for (TreeVertexId v : real.vertices()) {
    if (real.degree(v) == 3) center = v;
  }
  MUFLOW_ENSURE(center.value() >= 0, "star has no center");

  std::vector<Leaf> leaves;
  for (const auto& nb : real.neighbors(center)) {
    leaves.push_back({nb.vertex, {}, VertexId()});
  }
  for (VertexId s : net.terminals()) {
    const auto sub = real.subtree(s);
    if (sub.size() != 1) continue;
    MUFLOW_ENSURE(sub[0] != center, "simple terminal on the star center");
    for (Leaf& leaf : leaves) {
      if (leaf.vertex == sub[0]) leaf.simple.push_back(s);
    }
  }

  // Merge the simple terminals of every leaf into one.
  Network merged = net;
  std::set<VertexId> merge_vertices;
  for (Leaf& leaf : leaves) {
    MUFLOW_ENSURE(!leaf.simple.empty(), "leaf without simple terminal");
    if (leaf.simple.size() == 1) {
      leaf.sigma = leaf.simple.front();
    } else {
      leaf.sigma = ids.vertex();
      merged = contract(merged, leaf.simple, leaf.sigma);
      merge_vertices.insert(leaf.sigma);
    }
  }
  const Digraph& g = merged.graph();
  std::vector<VertexId> sigmas;
  for (const Leaf& leaf : leaves) sigmas.push_back(leaf.sigma);

  const FreeMultiflow free = free_imf(merged.with_terminals(sigmas));
  Multiflow f = free.multiflow;
  std::vector<Cut> final_cuts;

  for (std::size_t i = 0; i < 3; ++i) {
    const VertexId sigma = leaves[i].sigma;
    const Cut& x = free.cuts.at(sigma);
    std::vector<VertexId> q;
    for (VertexId t : merged.terminals()) {
      if (t == sigma || merge_vertices.contains(t) || !x.contains(t)) continue;
      const auto sub = real.subtree(t);
      if (!std::binary_search(sub.begin(), sub.end(), leaves[i].vertex)) {
        q.push_back(t);
      }
    }
    if (q.empty()) {
      final_cuts.push_back(x);
      continue;
    }

    // Reroute the flow inside X_i so that it also serves the terminals Q_i.
    const VertexId z = ids.vertex();
    const Network inner =
        contract(merged, complement_set(g, x.source_side()), z);
    const FlowFunction lex = lex_max_flow(inner, sigma, z, q);
    std::vector<VertexId> sinks = q;
    sinks.push_back(z);
    const VertexId src[] = {sigma};
    final_cuts.push_back(min_cut_source_side(inner, lex, src, sinks));
    const WeightedPathCollection out_paths = decompose(inner, lex, src, sinks);
    const WeightedPathCollection in_paths =
        decompose(inner, complement(inner, lex), sinks, src);

    auto inside = [&](VertexId v) { return x.contains(v); };
    auto strictly_outside = [&](const Arc& a) {
      return !inside(a.tail) && !inside(a.head);
    };
    const FlowFunction leaving =
        sum_components(f, [&](VertexId s, VertexId) { return s == sigma; });
    const FlowFunction entering =
        sum_components(f, [&](VertexId, VertexId t) { return t == sigma; });
    for (std::size_t j = 0; j < g.num_arcs(); ++j) {
      const Arc& a = g.arc(j);
      if (inside(a.tail) == inside(a.head)) continue;
      const Capacity c = merged.capacity_at(j);
      const bool out = inside(a.tail);
      MUFLOW_ENSURE((out ? leaving[a.id] : entering[a.id]) == c &&
                        (!out || lex[a.id] == c),
                    "leaf cut is not saturated before repair");
    }

    FlowFunction forward = restrict_to(merged, leaving, strictly_outside);
    FlowFunction backward = restrict_to(merged, entering, strictly_outside);
    Multiflow repaired;
    for (const auto& [pair, flow] : f.components()) {
      if (pair.first != sigma && pair.second != sigma) {
        repaired.add(pair.first, pair.second, flow);
      }
    }
    for (const WeightedPath& p : out_paths) {
      if (p.to == z) {
        for (ArcId a : p.arcs) forward.add(a, p.weight);
      } else {
        repaired.add_path(p);
      }
    }
    for (const WeightedPath& p : in_paths) {
      if (p.from == z) {
        for (ArcId a : p.arcs) backward.add(a, p.weight);
      } else {
        repaired.add_path(p);
      }
    }
    std::vector<VertexId> others;
    for (VertexId s : sigmas) {
      if (s != sigma) others.push_back(s);
    }
    repaired.add_paths(decompose(merged, forward, src, others));
    repaired.add_paths(decompose(merged, backward, others, src));
    f = std::move(repaired);
  }

  SubSolution out;
  out.multiflow = unmerge(net, merged, f, merge_vertices);
  for (std::size_t i = 0; i < 3; ++i) {
    const Cut side = merge_vertices.contains(leaves[i].sigma)
                         ? internal::expand_cut(final_cuts[i], leaves[i].sigma,
                                                leaves[i].simple)
                         : final_cuts[i];
    const TreeArc up{leaves[i].vertex, center};
    out.certificate.cuts[up] = side;
    out.certificate.cuts[up.reversed()] =
        Cut(complement_set(net.graph(), side.source_side()));
  }
  return out;
}

}  // namespace muflow
