#pragma once

#include <map>
#include <span>

#include "muflow/graph.hpp"
#include "muflow/normalize.hpp"
#include "muflow/realization.hpp"
#include "muflow/solution.hpp"

namespace muflow {

struct SolveOptions {
  // Worker threads for independent subproblems; 1 runs everything inline.
  int threads = 1;
  // Re-check the final multiflow and certificate before returning.
  bool verify = true;
};

// Maximum mu-value integer multiflow with an optimality certificate. Throws
// InputError(kNotEulerian) when an inner vertex or a complex terminal is not
// Eulerian, and ContractViolation if an internal invariant fails.
SolveOutput solve(const Network& net, const RealizationTree& real,
                  const SolveOptions& options = {});

// Integer maximum multiflow between the terminals of `net`, all pairs counted
// with weight one, plus for every terminal t the inclusion-minimal minimum
// (t, S - t)-cut. Both directions of every such cut are saturated and no path
// crosses one twice. Requires Eulerian non-terminals.
struct FreeMultiflow {
  Multiflow multiflow;
  std::map<VertexId, Cut> cuts;
};
FreeMultiflow free_imf(const Network& net);

// Total value of a multiflow (sum of component values).
Capacity total_value(const Network& net, const Multiflow& f);

// Partial solution of a reduced instance.
struct SubSolution {
  Multiflow multiflow;
  Certificate certificate;
  std::size_t depth = 1;
};

// Combines solutions of the two halves of a partition. `x1` is the source
// side of the partition cut; F1 lives on `net` with V - x1 contracted to z2,
// F2 on `net` with x1 contracted to z1. Both must saturate the boundary of
// their contraction vertex in both directions.
Multiflow aggregate(const Network& net, std::span<const VertexId> x1,
                    VertexId z1, VertexId z2, const Multiflow& f1,
                    const Multiflow& f2);

// Tree with a single edge.
SubSolution base_two_vertices(const Network& net, const RealizationTree& real);

// Star with three leaves; every leaf hosts a simple terminal.
SubSolution base_three_leaves(const Network& net, const RealizationTree& real,
                              IdPool& ids);

// Normalized instance where every inner tree vertex has degree 3 and every
// leaf hosts a simple terminal.
SubSolution solve_reduced(const Network& net, const RealizationTree& real,
                          IdPool& ids, int threads = 1);

}  // namespace muflow
