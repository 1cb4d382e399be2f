#include "muflow/realization.hpp"

#include <algorithm>
#include <string>

namespace muflow {

namespace {

std::string name(TreeVertexId v) { return std::to_string(v.value()); }

}  // namespace

RealizationTree::RealizationTree(std::vector<TreeVertexId> vertices,
                                 std::vector<TreeEdge> edges,
                                 SubtreeMap subtrees,
                                 std::set<VertexId> complexity_override)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      subtrees_(std::move(subtrees)),
      complexity_override_(std::move(complexity_override)) {
  std::sort(vertices_.begin(), vertices_.end());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!index_.emplace(vertices_[i], i).second) {
      throw InputError(InputErrorCode::kDuplicateId,
                       "duplicate tree vertex " + name(vertices_[i]));
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const TreeEdge& a, const TreeEdge& b) { return a.id < b.id; });
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const TreeEdge& e = edges_[i];
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw InputError(InputErrorCode::kDanglingReference,
                       "tree edge " + std::to_string(e.id.value()) +
                           " references an unknown tree vertex");
    }
    if (e.u == e.v) {
      throw InputError(
          InputErrorCode::kNotATree,
          "tree edge " + std::to_string(e.id.value()) + " is a loop");
    }
    if (e.len_uv < 0 || e.len_vu < 0) {
      throw InputError(InputErrorCode::kNegativeLength,
                       "tree edge " + std::to_string(e.id.value()) +
                           " has a negative length");
    }
    if (!edge_index_.emplace(e.id, i).second) {
      throw InputError(InputErrorCode::kDuplicateId,
                       "duplicate tree edge " + std::to_string(e.id.value()));
    }
    adjacency_[index_.at(e.u)].push_back({e.v, e.id});
    adjacency_[index_.at(e.v)].push_back({e.u, e.id});
  }
  if (vertices_.empty() || edges_.size() + 1 != vertices_.size()) {
    throw InputError(InputErrorCode::kNotATree,
                     "tree must be nonempty with |E| = |V| - 1");
  }
  {
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adjacency_[u]) {
        const std::size_t w = index_.at(nb.vertex);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != vertices_.size()) {
      throw InputError(InputErrorCode::kNotATree, "tree is disconnected");
    }
  }

  for (auto& [terminal, sub] : subtrees_) {
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    const std::string who =
        "subtree of terminal " + std::to_string(terminal.value());
    if (sub.empty()) {
      throw InputError(InputErrorCode::kDisconnectedSubtree, who + " is empty");
    }
    std::vector<char> in(vertices_.size(), 0);
    for (TreeVertexId v : sub) {
      if (!has_vertex(v)) {
        throw InputError(InputErrorCode::kDanglingReference,
                         who + " references unknown tree vertex " + name(v));
      }
      in[index_.at(v)] = 1;
    }
    std::vector<std::size_t> stack{index_.at(sub.front())};
    in[stack.back()] = 2;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : adjacency_[u]) {
        const std::size_t w = index_.at(nb.vertex);
        if (in[w] == 1) {
          in[w] = 2;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != sub.size()) {
      throw InputError(InputErrorCode::kDisconnectedSubtree,
                       who + " is not connected");
    }
  }
}

std::size_t RealizationTree::vertex_index(TreeVertexId v) const {
  auto it = index_.find(v);
  if (it == index_.end()) {
    throw InputError(InputErrorCode::kUnknownVertex,
                     "unknown tree vertex " + name(v));
  }
  return it->second;
}

const TreeEdge& RealizationTree::edge(TreeEdgeId id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    throw InputError(InputErrorCode::kUnknownArc,
                     "unknown tree edge " + std::to_string(id.value()));
  }
  return edges_[it->second];
}

std::optional<TreeEdgeId> RealizationTree::edge_between(TreeVertexId a,
                                                        TreeVertexId b) const {
  for (const Neighbor& nb : neighbors(a)) {
    if (nb.vertex == b) return nb.edge;
  }
  return std::nullopt;
}

std::size_t RealizationTree::leaf_count() const {
  std::size_t k = 0;
  for (const auto& adj : adjacency_) k += adj.size() == 1;
  return k;
}

const Rational& RealizationTree::length(TreeArc arc) const {
  auto id = edge_between(arc.from, arc.to);
  if (!id) {
    throw InputError(
        InputErrorCode::kUnknownArc,
        "no tree edge between " + name(arc.from) + " and " + name(arc.to));
  }
  const TreeEdge& e = edge(*id);
  return e.u == arc.from ? e.len_uv : e.len_vu;
}

std::vector<TreeArc> RealizationTree::arcs() const {
  std::vector<TreeArc> out;
  out.reserve(2 * edges_.size());
  for (const TreeEdge& e : edges_) {
    out.push_back({e.u, e.v});
    out.push_back({e.v, e.u});
  }
  return out;
}

std::span<const TreeVertexId> RealizationTree::subtree(
    VertexId terminal) const {
  auto it = subtrees_.find(terminal);
  if (it == subtrees_.end()) {
    throw InputError(
        InputErrorCode::kUnknownTerminal,
        "terminal " + std::to_string(terminal.value()) + " has no subtree");
  }
  return it->second;
}

std::vector<char> RealizationTree::side_of(TreeArc arc) const {
  if (!edge_between(arc.from, arc.to)) {
    throw InputError(
        InputErrorCode::kUnknownArc,
        "no tree edge between " + name(arc.from) + " and " + name(arc.to));
  }
  std::vector<char> side(vertices_.size(), 0);
  const std::size_t blocked = vertex_index(arc.to);
  std::vector<std::size_t> stack{vertex_index(arc.from)};
  side[stack.back()] = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : adjacency_[u]) {
      const std::size_t w = index_.at(nb.vertex);
      if (w != blocked && !side[w]) {
        side[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return side;
}

std::vector<Rational> distances_from(const RealizationTree& real,
                                     TreeVertexId x) {
  const auto verts = real.vertices();
  std::vector<Rational> dist(verts.size());
  std::vector<char> seen(verts.size(), 0);
  std::vector<TreeVertexId> stack{x};
  seen[real.vertex_index(x)] = 1;
  while (!stack.empty()) {
    const TreeVertexId u = stack.back();
    stack.pop_back();
    const std::size_t ui = real.vertex_index(u);
    for (const auto& nb : real.neighbors(u)) {
      const std::size_t wi = real.vertex_index(nb.vertex);
      if (seen[wi]) continue;
      seen[wi] = 1;
      dist[wi] = dist[ui] + real.length({u, nb.vertex});
      stack.push_back(nb.vertex);
    }
  }
  return dist;
}

Rational tree_distance(const RealizationTree& real, TreeVertexId x,
                       TreeVertexId y) {
  real.vertex_index(y);
  return distances_from(real, x)[real.vertex_index(y)];
}

Rational mu(const RealizationTree& real, VertexId s, VertexId t) {
  const auto from = real.subtree(s);
  const auto to = real.subtree(t);
  if (s == t) return 0;
  std::optional<Rational> best;
  for (TreeVertexId u : from) {
    const auto dist = distances_from(real, u);
    for (TreeVertexId v : to) {
      const Rational& d = dist[real.vertex_index(v)];
      if (!best || d < *best) best = d;
    }
  }
  return *best;
}

TerminalKind classify_terminal(const RealizationTree& real, VertexId s) {
  const auto sub = real.subtree(s);
  if (sub.size() == 1) return TerminalKind::kSimple;
  if (real.complexity_override().contains(s)) return TerminalKind::kComplex;
  // Path test: every vertex has at most two neighbours inside the subtree.
  std::vector<TreeVertexId> ends;
  for (TreeVertexId v : sub) {
    std::size_t inside = 0;
    for (const auto& nb : real.neighbors(v)) {
      inside += std::binary_search(sub.begin(), sub.end(), nb.vertex);
    }
    if (inside > 2) return TerminalKind::kComplex;
    if (inside == 1) ends.push_back(v);
  }
  if (ends.size() != 2) return TerminalKind::kComplex;
  Rational forward = 0;
  Rational backward = 0;
  TreeVertexId prev = ends[0];
  TreeVertexId cur = ends[0];
  while (cur != ends[1]) {
    TreeVertexId next = cur;
    for (const auto& nb : real.neighbors(cur)) {
      if (nb.vertex != prev &&
          std::binary_search(sub.begin(), sub.end(), nb.vertex)) {
        next = nb.vertex;
        break;
      }
    }
    forward += real.length({cur, next});
    backward += real.length({next, cur});
    prev = cur;
    cur = next;
  }
  return (forward == 0 || backward == 0) ? TerminalKind::kLinear
                                         : TerminalKind::kComplex;
}

PiSet pi_set(const RealizationTree& real, std::span<const VertexId> terminals,
             TreeArc a) {
  const auto tail_side = real.side_of(a);
  PiSet result{a, {}, {}};
  for (VertexId s : terminals) {
    bool all_tail = true;
    bool all_head = true;
    for (TreeVertexId v : real.subtree(s)) {
      if (tail_side[real.vertex_index(v)]) {
        all_head = false;
      } else {
        all_tail = false;
      }
    }
    if (all_tail) result.tail_side.push_back(s);
    if (all_head) result.head_side.push_back(s);
  }
  return result;
}

std::optional<TreeEdgeId> choose_balanced_edge(const RealizationTree& real) {
  const auto verts = real.vertices();
  if (verts.size() < 2) return std::nullopt;
  // Root at the first vertex; leaves_below[v] = tree leaves in v's subtree.
  const std::size_t n = verts.size();
  std::vector<std::size_t> order;
  std::vector<long> parent(n, -1);
  std::vector<char> seen(n, 0);
  order.reserve(n);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const TreeVertexId u = verts[order[i]];
    for (const auto& nb : real.neighbors(u)) {
      const std::size_t w = real.vertex_index(nb.vertex);
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = static_cast<long>(order[i]);
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> leaves_below(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (real.is_leaf(verts[*it])) leaves_below[*it] += 1;
    if (parent[*it] >= 0) leaves_below[parent[*it]] += leaves_below[*it];
  }
  const std::size_t k = real.leaf_count();

  std::optional<TreeEdgeId> best;
  std::size_t best_worst = 0;
  for (const TreeEdge& e : real.edges()) {
    if (real.is_leaf(e.u) || real.is_leaf(e.v)) continue;
    const std::size_t ui = real.vertex_index(e.u);
    const std::size_t vi = real.vertex_index(e.v);
    const std::size_t child = parent[vi] == static_cast<long>(ui) ? vi : ui;
    const std::size_t below = leaves_below[child];
    const std::size_t worst = std::max(below, k - below);
    if (3 * worst <= 2 * k) return e.id;
    if (!best || worst < best_worst) {
      best = e.id;
      best_worst = worst;
    }
  }
  return best;
}

}  // namespace muflow
