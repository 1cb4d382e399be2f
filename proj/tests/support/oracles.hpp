#pragma once

#include <span>
#include <utility>
#include <vector>

#include "muflow/graph.hpp"
#include "muflow/rational.hpp"
#include "muflow/realization.hpp"

// Deliberately naive reference computations, sharing no code with the
// library beyond its data types.
namespace muflow::testing {

// Plain Edmonds-Karp over an explicit residual edge list.
// Returns the maximum flow value from `sources` to `sinks`.
Capacity oracle_max_flow(const Network& net, std::span<const VertexId> sources,
                         std::span<const VertexId> sinks);

// Directed tree distances, recomputed from scratch by walking the tree from
// every vertex. Lengths are scaled to integers by the common denominator.
// One arc may be lengthened by a positive amount.
class TreeMetric {
 public:
  explicit TreeMetric(const RealizationTree& real,
                      const TreeArc* bumped = nullptr);
  Rational distance(TreeVertexId x, TreeVertexId y) const;
  // min over u in T_s, v in T_t of d(u, v).
  Rational mu(const RealizationTree& real, VertexId s, VertexId t) const;
  // Same, in units of 1 / scale().
  std::int64_t scaled_mu(const RealizationTree& real, VertexId s,
                         VertexId t) const;
  std::int64_t scale() const { return scale_; }

 private:
  std::size_t index(TreeVertexId v) const;

  std::vector<TreeVertexId> ids_;
  std::int64_t scale_ = 1;
  std::vector<std::vector<std::int64_t>> d_;
};

// Pairs (s, t), s != t, whose mu grows when the length of `a` grows.
std::vector<std::pair<VertexId, VertexId>> oracle_pi(
    const RealizationTree& real, std::span<const VertexId> terminals,
    TreeArc a);

// sum over arcs a of l(a) times the minimum cut separating the first members
// of the oracle pairs from the second members.
Rational oracle_dual(const Network& net, const RealizationTree& real);

}  // namespace muflow::testing
