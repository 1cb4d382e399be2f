#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "muflow/error.hpp"
#include "muflow/ids.hpp"

namespace muflow {

// a + b, throwing InputError(kOverflow) instead of wrapping.
Capacity checked_add(Capacity a, Capacity b);

struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;
};

// Directed multigraph. Parallel and antiparallel arcs are allowed; loops are
// dropped on construction. Vertices and arcs are kept sorted by id, and every
// query by dense index refers to that order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::vector<VertexId> vertices, std::vector<Arc> arcs);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Arc> arcs() const { return arcs_; }

  const Arc& arc(std::size_t index) const { return arcs_[index]; }
  VertexId vertex(std::size_t index) const { return vertices_[index]; }

  bool has_vertex(VertexId v) const { return vertex_index_.contains(v); }
  bool has_arc(ArcId a) const { return arc_index_.contains(a); }

  // Throw InputError(kUnknownVertex / kUnknownArc) on a miss.
  std::size_t vertex_index(VertexId v) const;
  std::size_t arc_index(ArcId a) const;
  std::optional<std::size_t> find_arc(ArcId a) const;

  // Arc indices leaving / entering the vertex with the given dense index.
  std::span<const std::size_t> out_arcs(std::size_t vertex_index) const {
    return out_[vertex_index];
  }
  std::span<const std::size_t> in_arcs(std::size_t vertex_index) const {
    return in_[vertex_index];
  }

  // Largest vertex / arc id value, or -1 for an empty graph.
  std::int64_t max_vertex_id() const;
  std::int64_t max_arc_id() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arc> arcs_;
  std::unordered_map<VertexId, std::size_t> vertex_index_;
  std::unordered_map<ArcId, std::size_t> arc_index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

// Sparse nonnegative-or-signed integer function on arcs, keyed by arc id.
// Zero entries are never stored.
class ArcFunction {
 public:
  ArcFunction() = default;

  Capacity operator[](ArcId a) const {
    auto it = values_.find(a);
    return it == values_.end() ? 0 : it->second;
  }
  void set(ArcId a, Capacity value);
  void add(ArcId a, Capacity delta);
  void add(const ArcFunction& other);

  bool empty() const { return values_.empty(); }
  std::size_t support_size() const { return values_.size(); }
  const std::map<ArcId, Capacity>& values() const { return values_; }

  friend bool operator==(const ArcFunction&, const ArcFunction&) = default;

 private:
  std::map<ArcId, Capacity> values_;
};

struct ArcSpec {
  ArcId id;
  VertexId tail;
  VertexId head;
  Capacity capacity = 0;
};

// Directed network (G, S, c): digraph, terminal set and integer capacities.
class Network {
 public:
  Network() = default;
  Network(std::vector<VertexId> vertices, std::vector<ArcSpec> arcs,
          std::vector<VertexId> terminals);

  const Digraph& graph() const { return graph_; }
  std::span<const VertexId> terminals() const { return terminals_; }
  bool is_terminal(VertexId v) const;

  Capacity capacity(ArcId a) const { return capacity_[graph_.arc_index(a)]; }
  Capacity capacity_at(std::size_t arc_index) const {
    return capacity_[arc_index];
  }

  Capacity out_capacity(VertexId v) const;
  Capacity in_capacity(VertexId v) const;
  Capacity total_capacity() const;

  std::vector<ArcSpec> arc_specs() const;

  // Same graph and capacities, different terminal set.
  Network with_terminals(std::vector<VertexId> terminals) const;

 private:
  Digraph graph_;
  std::vector<VertexId> terminals_;
  std::vector<Capacity> capacity_;
};

// Source side X of a cut (X, V - X). Stored sorted and deduplicated.
class Cut {
 public:
  Cut() = default;
  explicit Cut(std::vector<VertexId> source_side);

  std::span<const VertexId> source_side() const { return source_side_; }
  bool contains(VertexId v) const;
  std::size_t size() const { return source_side_.size(); }

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  std::vector<VertexId> source_side_;
};

// f(δout(v)) - f(δin(v)).
Capacity divergence(const Network& net, const ArcFunction& f, VertexId v);

bool is_eulerian_at(const Network& net, VertexId v);

// c(δout(X)). Throws InputError(kInvalidCut) unless X is a nonempty proper
// subset of the vertices.
Capacity cut_capacity(const Network& net, const Cut& x);
// c(δin(X)), same preconditions.
Capacity cut_in_capacity(const Network& net, const Cut& x);

// Replaces every vertex of X by the fresh vertex z. Arcs inside X vanish, all
// other arcs keep their ids and capacities. Terminals become (S - X) + z.
Network contract(const Network& net, std::span<const VertexId> x, VertexId z);

// Membership mask over dense vertex indices.
std::vector<char> vertex_mask(const Digraph& g, std::span<const VertexId> set);

}  // namespace muflow
