#pragma once

#include <map>
#include <utility>

#include "muflow/graph.hpp"
#include "muflow/maxflow.hpp"
#include "muflow/rational.hpp"
#include "muflow/realization.hpp"

namespace muflow {

using TerminalPair = std::pair<VertexId, VertexId>;

// Integer multiflow in component form: one s-t flow per ordered terminal pair.
class Multiflow {
 public:
  using ComponentMap = std::map<TerminalPair, FlowFunction>;

  const ComponentMap& components() const { return components_; }
  bool empty() const { return components_.empty(); }

  // Null when the pair carries nothing.
  const FlowFunction* find(VertexId s, VertexId t) const;

  void add(VertexId s, VertexId t, const FlowFunction& f);
  void add_path(const WeightedPath& path);
  void add_paths(const WeightedPathCollection& paths);
  void erase(VertexId s, VertexId t) { components_.erase({s, t}); }

  // Arc-wise sum over all components.
  FlowFunction arc_sum() const;

  // Flow value of the s-t component (its divergence at s).
  static Capacity value_of(const Network& net, const FlowFunction& f,
                           VertexId s);

  friend bool operator==(const Multiflow&, const Multiflow&) = default;

 private:
  ComponentMap components_;
};

// One cut per tree arc (X_a, V - X_a).
struct Certificate {
  std::map<TreeArc, Cut> cuts;
};

struct SolveStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t leaf_count = 0;
  std::size_t recursion_depth = 0;
  std::int64_t maxflow_calls = 0;
  double wall_ms = 0;
};

struct SolveOutput {
  Multiflow multiflow;
  Certificate certificate;
  Rational value;
  SolveStats stats;
};

// Path form of a multiflow: every component peeled with `decompose`.
WeightedPathCollection to_paths(const Network& net, const Multiflow& f);

}  // namespace muflow
