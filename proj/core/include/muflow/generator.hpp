#pragma once

#include <cstdint>

#include "muflow/io.hpp"

namespace muflow {

struct GeneratorOptions {
  std::uint64_t seed = 1;
  int n = 50;
  int cycles = 30;
  int pairs = 10;
  int leaves = 5;

  // 0 picks min(n, 2 * leaves).
  int terminals = 0;
  double simple_fraction = 0.5;
  int min_walk = 2;
  int max_walk = 6;
  // Chance that a walk step opens a new arc parallel to an existing one.
  double parallel_rate = 0.1;
  // Extra zero-capacity arcs, as a fraction of the arcs the walks created.
  double zero_arc_rate = 0.05;

  // Put one simple terminal on every tree leaf first. With false, leaves may
  // stay bare.
  bool cover_leaves = true;
  // Terminals made linear on purpose: their subtree is one edge whose length
  // is zero in one direction.
  int linear_terminals = 0;
  // Open walks may also end at linear terminals.
  bool walks_end_at_linear = false;
  // Probability that tree growth attaches to the current highest-degree
  // vertex instead of a uniform one.
  double hub_bias = 0.0;
  // Extra tree vertices beyond what the leaf count needs, drawn from
  // [0, extra_tree_vertices].
  int extra_tree_vertices = -1;  // -1: use leaves
};

// Random inner-Eulerian instance. Capacities are a superposition of directed
// closed walks and of open walks between simple terminals, so every inner
// vertex and every complex terminal is balanced. Deterministic in the options.
// Throws InputError(kInvalidArgument) for unusable parameters.
Instance generate_instance(const GeneratorOptions& options);
Instance generate_instance(std::uint64_t seed, int n, int cycles, int pairs,
                           int leaves);

}  // namespace muflow
