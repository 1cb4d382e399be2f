#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "muflow/graph.hpp"
#include "muflow/ids.hpp"
#include "muflow/rational.hpp"

namespace muflow {

// Undirected tree edge {u, v} carrying one length per direction.
struct TreeEdge {
  TreeEdgeId id;
  TreeVertexId u;
  TreeVertexId v;
  Rational len_uv;
  Rational len_vu;
};

// Directed arc of the quasi-tree: one of the two orientations of an edge.
struct TreeArc {
  TreeVertexId from;
  TreeVertexId to;

  TreeArc reversed() const { return {to, from}; }
  friend auto operator<=>(const TreeArc&, const TreeArc&) = default;
};

enum class TerminalKind { kSimple, kLinear, kComplex };

// Tree realization (T, l, {T_s}) of a directed distance on terminals.
class RealizationTree {
 public:
  using SubtreeMap = std::map<VertexId, std::vector<TreeVertexId>>;

  RealizationTree() = default;
  // Throws InputError if the edges do not form a tree on `vertices`, a length
  // is negative, or a subtree is empty, dangling or disconnected.
  RealizationTree(std::vector<TreeVertexId> vertices,
                  std::vector<TreeEdge> edges, SubtreeMap subtrees,
                  std::set<VertexId> complexity_override = {});

  std::span<const TreeVertexId> vertices() const { return vertices_; }
  std::span<const TreeEdge> edges() const { return edges_; }
  const SubtreeMap& subtrees() const { return subtrees_; }
  const std::set<VertexId>& complexity_override() const {
    return complexity_override_;
  }

  bool has_vertex(TreeVertexId v) const { return index_.contains(v); }
  std::size_t vertex_index(TreeVertexId v) const;
  const TreeEdge& edge(TreeEdgeId id) const;
  std::optional<TreeEdgeId> edge_between(TreeVertexId a, TreeVertexId b) const;

  struct Neighbor {
    TreeVertexId vertex;
    TreeEdgeId edge;
  };
  std::span<const Neighbor> neighbors(TreeVertexId v) const {
    return adjacency_[vertex_index(v)];
  }
  std::size_t degree(TreeVertexId v) const { return neighbors(v).size(); }
  bool is_leaf(TreeVertexId v) const { return degree(v) == 1; }
  std::size_t leaf_count() const;

  // l(arc). Throws InputError for a pair that is not a tree edge.
  const Rational& length(TreeArc arc) const;
  std::vector<TreeArc> arcs() const;

  bool has_subtree(VertexId terminal) const {
    return subtrees_.contains(terminal);
  }
  // Sorted vertex list of T_s; throws InputError(kUnknownTerminal).
  std::span<const TreeVertexId> subtree(VertexId terminal) const;

  // Vertices on the `arc.from` side after deleting the arc's edge (mask over
  // dense vertex indices).
  std::vector<char> side_of(TreeArc arc) const;

 private:
  std::vector<TreeVertexId> vertices_;
  std::vector<TreeEdge> edges_;
  SubtreeMap subtrees_;
  std::set<VertexId> complexity_override_;
  std::unordered_map<TreeVertexId, std::size_t> index_;
  std::unordered_map<TreeEdgeId, std::size_t> edge_index_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Length of the directed x -> y path.
Rational tree_distance(const RealizationTree& real, TreeVertexId x,
                       TreeVertexId y);

// Directed distances from x to every vertex, indexed densely.
std::vector<Rational> distances_from(const RealizationTree& real,
                                     TreeVertexId x);

// min { d(u, v) : u in T_s, v in T_t }; zero when s == t.
Rational mu(const RealizationTree& real, VertexId s, VertexId t);

TerminalKind classify_terminal(const RealizationTree& real, VertexId s);

// For the arc a = (u, v): A = terminals whose subtree lies entirely on u's
// side of the edge, B = those entirely on v's side. Pi_a = A x B.
struct PiSet {
  TreeArc tree_arc;
  std::vector<VertexId> tail_side;
  std::vector<VertexId> head_side;

  bool empty() const { return tail_side.empty() || head_side.empty(); }
};

PiSet pi_set(const RealizationTree& real, std::span<const VertexId> terminals,
             TreeArc a);

// Edge with two non-leaf endpoints whose sides have at most 2k/3 + 1 leaves
// each (counting the contracted side as one leaf); nullopt when every edge
// touches a leaf.
std::optional<TreeEdgeId> choose_balanced_edge(const RealizationTree& real);

}  // namespace muflow
