#include "muflow/normalize.hpp"

#include <algorithm>
#include <set>

namespace muflow {

namespace {

// Mutable copy of an instance used while the reductions run.
struct WorkInstance {
  std::vector<VertexId> vertices;
  std::vector<ArcSpec> arcs;
  std::set<VertexId> terminals;

  std::set<TreeVertexId> tree_vertices;
  std::map<TreeEdgeId, TreeEdge> edges;
  std::map<TreeVertexId, std::set<TreeEdgeId>> incident;
  std::map<VertexId, std::set<TreeVertexId>> subtrees;
  std::set<VertexId> overrides;

  // Current image of every original edge, as (edge, reversed).
  std::map<TreeEdgeId, std::optional<EdgeImage>> images;

  static WorkInstance from(const Network& net, const RealizationTree& real) {
    WorkInstance w;
    const auto vs = net.graph().vertices();
    w.vertices.assign(vs.begin(), vs.end());
    w.arcs = net.arc_specs();
    w.terminals.insert(net.terminals().begin(), net.terminals().end());
    for (TreeVertexId v : real.vertices()) {
      w.tree_vertices.insert(v);
      w.incident[v];
    }
    for (const TreeEdge& e : real.edges()) {
      w.edges.emplace(e.id, e);
      w.incident[e.u].insert(e.id);
      w.incident[e.v].insert(e.id);
      w.images[e.id] = EdgeImage{e.id, false};
    }
    for (const auto& [s, sub] : real.subtrees()) {
      w.subtrees[s].insert(sub.begin(), sub.end());
    }
    w.overrides = real.complexity_override();
    return w;
  }

  Network network() const {
    return Network(vertices, arcs,
                   std::vector<VertexId>(terminals.begin(), terminals.end()));
  }

  RealizationTree tree() const {
    std::vector<TreeEdge> es;
    for (const auto& [id, e] : edges) es.push_back(e);
    RealizationTree::SubtreeMap subs;
    for (const auto& [s, sub] : subtrees) {
      subs[s] = std::vector<TreeVertexId>(sub.begin(), sub.end());
    }
    return RealizationTree(
        std::vector<TreeVertexId>(tree_vertices.begin(), tree_vertices.end()),
        std::move(es), std::move(subs), overrides);
  }

  NormalizationUndo undo(std::vector<LinearSplit> splits) const {
    return {std::move(splits), images};
  }

  std::size_t degree(TreeVertexId v) const { return incident.at(v).size(); }

  TreeVertexId other_end(TreeEdgeId id, TreeVertexId v) const {
    const TreeEdge& e = edges.at(id);
    return e.u == v ? e.v : e.u;
  }

  bool hosts_simple(TreeVertexId v) const {
    for (const auto& [s, sub] : subtrees) {
      if (sub.size() == 1 && *sub.begin() == v) return true;
    }
    return false;
  }

  void remove_edge(TreeEdgeId id) {
    const TreeEdge e = edges.at(id);
    incident[e.u].erase(id);
    incident[e.v].erase(id);
    edges.erase(id);
  }

  TreeEdgeId add_edge(IdPool& ids, TreeVertexId u, TreeVertexId v) {
    const TreeEdgeId id = ids.tree_edge();
    edges.emplace(id, TreeEdge{id, u, v, 0, 0});
    incident[u].insert(id);
    incident[v].insert(id);
    return id;
  }

  void redirect_images(TreeEdgeId from, TreeEdgeId to, bool flip) {
    for (auto& [orig, img] : images) {
      if (img && img->edge == from) img = EdgeImage{to, img->reversed != flip};
    }
  }

  void drop_images(TreeEdgeId from) {
    for (auto& [orig, img] : images) {
      if (img && img->edge == from) img.reset();
    }
  }
};

LinearSplit split_in_place(WorkInstance& w, VertexId s, IdPool& ids,
                           const RealizationTree& snapshot) {
  MUFLOW_ENSURE(classify_terminal(snapshot, s) == TerminalKind::kLinear,
                "terminal " + std::to_string(s.value()) + " is not linear");
  // Path endpoints; t2 -> t1 is the zero-length direction.
  const auto sub = snapshot.subtree(s);
  std::vector<TreeVertexId> ends;
  for (TreeVertexId v : sub) {
    std::size_t inside = 0;
    for (const auto& nb : snapshot.neighbors(v)) {
      inside += std::binary_search(sub.begin(), sub.end(), nb.vertex);
    }
    if (inside == 1) ends.push_back(v);
  }
  TreeVertexId t1 = ends[0];
  TreeVertexId t2 = ends[1];
  if (tree_distance(snapshot, t2, t1) != 0) std::swap(t1, t2);

  const Network snapshot_net = w.network();
  const Capacity in_cap = snapshot_net.in_capacity(s);
  const Capacity out_cap = snapshot_net.out_capacity(s);

  LinearSplit split;
  split.terminal = s;
  split.inflow_terminal = ids.vertex();
  split.outflow_terminal = ids.vertex();
  split.inflow_arc = ids.arc();
  split.outflow_arc = ids.arc();
  w.vertices.push_back(split.inflow_terminal);
  w.vertices.push_back(split.outflow_terminal);
  w.arcs.push_back({split.inflow_arc, s, split.inflow_terminal, in_cap});
  w.arcs.push_back({split.outflow_arc, split.outflow_terminal, s, out_cap});
  w.terminals.erase(s);
  w.terminals.insert(split.inflow_terminal);
  w.terminals.insert(split.outflow_terminal);
  w.subtrees.erase(s);
  w.overrides.erase(s);
  w.subtrees[split.inflow_terminal] = {t1};
  w.subtrees[split.outflow_terminal] = {t2};
  return split;
}

// Delete leaves that host no simple terminal.
bool prune_bare_leaves(WorkInstance& w) {
  bool changed = false;
  bool again = true;
  while (again) {
    again = false;
    for (TreeVertexId v : std::vector<TreeVertexId>(w.tree_vertices.begin(),
                                                    w.tree_vertices.end())) {
      if (w.tree_vertices.size() < 2 || w.degree(v) != 1) continue;
      if (w.hosts_simple(v)) continue;
      const TreeEdgeId e = *w.incident.at(v).begin();
      w.drop_images(e);
      w.remove_edge(e);
      w.tree_vertices.erase(v);
      w.incident.erase(v);
      for (auto& [s, sub] : w.subtrees) sub.erase(v);
      changed = again = true;
    }
  }
  return changed;
}

// A simple terminal on an inner vertex moves to a fresh pendant leaf.
void relocate_inner_simple(WorkInstance& w, IdPool& ids) {
  for (TreeVertexId v : std::vector<TreeVertexId>(w.tree_vertices.begin(),
                                                  w.tree_vertices.end())) {
    if (w.degree(v) < 2 || !w.hosts_simple(v)) continue;
    const TreeVertexId leaf = ids.tree_vertex();
    w.tree_vertices.insert(leaf);
    w.incident[leaf];
    w.add_edge(ids, v, leaf);
    for (auto& [s, sub] : w.subtrees) {
      if (sub.size() == 1 && *sub.begin() == v) sub = {leaf};
    }
  }
}

// Split vertices of degree >= 4 with zero-length edges.
void split_high_degree(WorkInstance& w, IdPool& ids) {
  std::vector<TreeVertexId> todo(w.tree_vertices.begin(),
                                 w.tree_vertices.end());
  while (!todo.empty()) {
    const TreeVertexId v = todo.back();
    todo.pop_back();
    if (w.degree(v) < 4) continue;
    const TreeVertexId fresh = ids.tree_vertex();
    w.tree_vertices.insert(fresh);
    w.incident[fresh];
    // v keeps its two lowest-id edges; the rest move to `fresh`.
    std::vector<TreeEdgeId> moved(std::next(w.incident.at(v).begin(), 2),
                                  w.incident.at(v).end());
    std::set<TreeVertexId> moved_neighbors;
    for (TreeEdgeId id : moved) {
      TreeEdge& e = w.edges.at(id);
      moved_neighbors.insert(e.u == v ? e.v : e.u);
      (e.u == v ? e.u : e.v) = fresh;
      w.incident[v].erase(id);
      w.incident[fresh].insert(id);
    }
    w.add_edge(ids, v, fresh);
    for (auto& [s, sub] : w.subtrees) {
      if (!sub.contains(v)) continue;
      for (TreeVertexId nb : moved_neighbors) {
        if (sub.contains(nb)) {
          sub.insert(fresh);
          break;
        }
      }
    }
    todo.push_back(fresh);
  }
}

// Merge the two edges at a degree-2 vertex unless some subtree ends there.
void merge_degree_two(WorkInstance& w) {
  bool again = true;
  while (again) {
    again = false;
    for (TreeVertexId v : std::vector<TreeVertexId>(w.tree_vertices.begin(),
                                                    w.tree_vertices.end())) {
      if (w.degree(v) != 2) continue;
      const TreeEdgeId keep = *w.incident.at(v).begin();
      const TreeEdgeId gone = *std::next(w.incident.at(v).begin());
      const TreeVertexId a = w.other_end(keep, v);
      const TreeVertexId b = w.other_end(gone, v);
      bool mergeable = true;
      for (const auto& [s, sub] : w.subtrees) {
        if (sub.contains(v) && !(sub.contains(a) && sub.contains(b))) {
          mergeable = false;
          break;
        }
      }
      if (!mergeable) continue;

      const TreeEdge old_keep = w.edges.at(keep);
      const TreeEdge old_gone = w.edges.at(gone);
      auto len = [](const TreeEdge& e, TreeVertexId from) -> const Rational& {
        return e.u == from ? e.len_uv : e.len_vu;
      };
      TreeEdge merged{keep, a, b, len(old_keep, a) + len(old_gone, v),
                      len(old_gone, b) + len(old_keep, v)};
      // keep: a -> v becomes a -> b, so it flips iff it was stored as (v, a).
      const bool flip_keep = old_keep.u == v;
      // gone: v -> b becomes a -> b, so it flips iff it was stored as (b, v).
      const bool flip_gone = old_gone.u == b;

      w.remove_edge(gone);
      w.incident[v].erase(keep);
      w.incident[b].insert(keep);
      w.edges.at(keep) = merged;
      w.tree_vertices.erase(v);
      w.incident.erase(v);
      for (auto& [s, sub] : w.subtrees) sub.erase(v);
      w.redirect_images(keep, keep, flip_keep);
      w.redirect_images(gone, keep, flip_gone);
      again = true;
    }
  }
}

}  // namespace

IdPool IdPool::after(const Network& net, const RealizationTree& real) {
  IdPool pool;
  pool.next_vertex_ = net.graph().max_vertex_id() + 1;
  pool.next_arc_ = net.graph().max_arc_id() + 1;
  for (TreeVertexId v : real.vertices()) {
    pool.next_tree_vertex_ = std::max(pool.next_tree_vertex_, v.value() + 1);
  }
  for (const TreeEdge& e : real.edges()) {
    pool.next_tree_edge_ = std::max(pool.next_tree_edge_, e.id.value() + 1);
  }
  return pool;
}

ReducedInstance split_linear_terminal(const Network& net,
                                      const RealizationTree& real, VertexId s,
                                      IdPool& ids) {
  WorkInstance w = WorkInstance::from(net, real);
  LinearSplit split = split_in_place(w, s, ids, real);
  return {w.network(), w.tree(), w.undo({split})};
}

ReducedInstance normalize(const Network& net, const RealizationTree& real,
                          IdPool& ids) {
  WorkInstance w = WorkInstance::from(net, real);
  std::vector<LinearSplit> splits;

  prune_bare_leaves(w);
  {
    const RealizationTree snapshot = w.tree();
    for (VertexId s : net.terminals()) {
      if (!w.subtrees.contains(s)) continue;
      if (classify_terminal(snapshot, s) == TerminalKind::kLinear) {
        splits.push_back(split_in_place(w, s, ids, snapshot));
      }
    }
  }
  relocate_inner_simple(w, ids);
  split_high_degree(w, ids);
  merge_degree_two(w);
  return {w.network(), w.tree(), w.undo(std::move(splits))};
}

ReducedInstance normalize(const Network& net, const RealizationTree& real) {
  IdPool ids = IdPool::after(net, real);
  return normalize(net, real, ids);
}

std::optional<TreeArc> arc_image(const NormalizationUndo& undo,
                                 const RealizationTree& original,
                                 const RealizationTree& reduced,
                                 TreeArc original_arc) {
  const auto id = original.edge_between(original_arc.from, original_arc.to);
  if (!id) {
    throw InputError(InputErrorCode::kUnknownArc, "not an original tree arc");
  }
  auto it = undo.edge_images.find(*id);
  if (it == undo.edge_images.end() || !it->second) return std::nullopt;
  const TreeEdge& orig = original.edge(*id);
  const TreeEdge& img = reduced.edge(it->second->edge);
  const bool forward = (original_arc.from == orig.u) != it->second->reversed;
  return forward ? TreeArc{img.u, img.v} : TreeArc{img.v, img.u};
}

Multiflow pull_back_multiflow(const NormalizationUndo& undo,
                              const Multiflow& reduced) {
  Multiflow current = reduced;
  for (auto it = undo.splits.rbegin(); it != undo.splits.rend(); ++it) {
    const LinearSplit& sp = *it;
    Multiflow next;
    for (const auto& [pair, f] : current.components()) {
      VertexId from = pair.first;
      VertexId to = pair.second;
      FlowFunction g = f;
      if (from == sp.outflow_terminal) {
        from = sp.terminal;
        g.set(sp.outflow_arc, 0);
      }
      if (to == sp.inflow_terminal) {
        to = sp.terminal;
        g.set(sp.inflow_arc, 0);
      }
      if (from == to) continue;
      next.add(from, to, g);
    }
    current = std::move(next);
  }
  return current;
}

Certificate pull_back_certificate(const NormalizationUndo& undo,
                                  const Network& original_net,
                                  const RealizationTree& original,
                                  const RealizationTree& reduced,
                                  const Certificate& cert) {
  Certificate out;
  const Digraph& g = original_net.graph();
  for (const TreeArc& a : original.arcs()) {
    const PiSet pi = pi_set(original, original_net.terminals(), a);
    if (pi.empty()) continue;
    const auto image = arc_image(undo, original, reduced, a);
    MUFLOW_ENSURE(image.has_value(),
                  "tree arc with nonempty pair set was deleted");
    auto it = cert.cuts.find(*image);
    MUFLOW_ENSURE(it != cert.cuts.end(), "reduced certificate misses an arc");
    std::vector<VertexId> side;
    for (VertexId v : it->second.source_side()) {
      if (g.has_vertex(v)) side.push_back(v);
    }
    for (const LinearSplit& sp : undo.splits) {
      const bool in_tail = std::binary_search(pi.tail_side.begin(),
                                              pi.tail_side.end(), sp.terminal);
      const bool in_head = std::binary_search(pi.head_side.begin(),
                                              pi.head_side.end(), sp.terminal);
      if (in_tail) side.push_back(sp.terminal);
      if (in_head) std::erase(side, sp.terminal);
    }
    out.cuts.emplace(a, Cut(std::move(side)));
  }
  return out;
}

}  // namespace muflow
