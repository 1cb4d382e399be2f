#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "muflow/generator.hpp"
#include "muflow/io.hpp"

namespace muflow::testing {

struct ArcRow {
  int tail;
  int head;
  Capacity cap;
};

struct EdgeRow {
  int u;
  int v;
  Rational len_uv;
  Rational len_vu;
};

// Vertices 0..n-1, arcs numbered in row order.
Network make_network(int n, const std::vector<ArcRow>& arcs,
                     const std::vector<int>& terminals);
// Tree vertices 0..k-1, edges numbered in row order. `subtrees[i]` belongs to
// terminals[i] of the matching network.
RealizationTree make_tree(int k, const std::vector<EdgeRow>& edges,
                          const std::vector<int>& terminals,
                          const std::vector<std::vector<int>>& subtrees);

// s -> t capacity 2, t -> s capacity 1, one tree edge of lengths 3 and 0.
// Optimum 6.
Instance two_vertex_example();
// Three terminals joined to one hub by unit arcs both ways, three-leaf star
// with unit lengths. Optimum 6, free multiflow value 3.
Instance hub_example();

// Random instance for the large sweeps: n <= 200, about m <= 1000, 2 to 8
// tree leaves, parameters drawn from the seed.
Instance sweep_instance(std::uint64_t seed);
// All terminals simple; tree replaced by a star with length 1 towards the
// center and 0 away from it, so mu(s, t) = 1 for s != t.
Instance free_star_instance(std::uint64_t seed);
// Two simple terminals on a one-edge tree with random lengths.
Instance two_terminal_instance(std::uint64_t seed);
// Contains at least one linear terminal, a tree vertex of degree >= 4 and a
// leaf without simple terminal.
Instance reduction_instance(std::uint64_t seed);
// Same tree with fresh random lengths; zero lengths stay zero and positive
// ones stay positive, so every terminal keeps its kind.
RealizationTree reweighted(const RealizationTree& real, std::uint64_t seed);

// One representative per isomorphism class of trees on 1..max_vertices
// vertices, as edge lists over 0..k-1.
std::vector<std::vector<std::pair<int, int>>> all_trees(int max_vertices);
// Vertex sets of all connected subtrees of a tree on k vertices.
std::vector<std::vector<int>> connected_subtrees(
    int k, const std::vector<std::pair<int, int>>& edges);

bool has_linear_terminal(const Instance& instance);
bool has_high_degree_vertex(const Instance& instance);
bool has_bare_leaf(const Instance& instance);

}  // namespace muflow::testing
