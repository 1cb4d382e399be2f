#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace muflow::testing {

namespace {

int draw(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rational draw_length(std::mt19937_64& rng, int lo) {
  return Rational(draw(rng, lo, 6), draw(rng, 1, 4));
}

}  // namespace

Network make_network(int n, const std::vector<ArcRow>& arcs,
                     const std::vector<int>& terminals) {
  std::vector<VertexId> vertices;
  for (int v = 0; v < n; ++v) vertices.emplace_back(v);
  std::vector<ArcSpec> specs;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    specs.push_back({ArcId(static_cast<std::int64_t>(i)),
                     VertexId(arcs[i].tail), VertexId(arcs[i].head),
                     arcs[i].cap});
  }
  std::vector<VertexId> ts;
  for (int t : terminals) ts.emplace_back(t);
  return Network(std::move(vertices), std::move(specs), std::move(ts));
}

RealizationTree make_tree(int k, const std::vector<EdgeRow>& edges,
                          const std::vector<int>& terminals,
                          const std::vector<std::vector<int>>& subtrees) {
  std::vector<TreeVertexId> vertices;
  for (int v = 0; v < k; ++v) vertices.emplace_back(v);
  std::vector<TreeEdge> tree_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    tree_edges.push_back({TreeEdgeId(static_cast<std::int64_t>(i)),
                          TreeVertexId(edges[i].u), TreeVertexId(edges[i].v),
                          edges[i].len_uv, edges[i].len_vu});
  }
  RealizationTree::SubtreeMap map;
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    auto& sub = map[VertexId(terminals[i])];
    for (int v : subtrees[i]) sub.emplace_back(v);
  }
  return RealizationTree(std::move(vertices), std::move(tree_edges),
                         std::move(map));
}

Instance two_vertex_example() {
  return Instance::with_default_names(
      make_network(2, {{0, 1, 2}, {1, 0, 1}}, {0, 1}),
      make_tree(2, {{0, 1, 3, 0}}, {0, 1}, {{0}, {1}}));
}

Instance hub_example() {
  // Vertex 0 is the hub, 1..3 the terminals; tree center 0, leaves 1..3.
  return Instance::with_default_names(
      make_network(
          4, {{1, 0, 1}, {0, 1, 1}, {2, 0, 1}, {0, 2, 1}, {3, 0, 1}, {0, 3, 1}},
          {1, 2, 3}),
      make_tree(4, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 1, 1}}, {1, 2, 3},
                {{1}, {2}, {3}}));
}

Instance sweep_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL);
  GeneratorOptions o;
  o.seed = seed;
  o.n = draw(rng, 10, 200);
  o.leaves = draw(rng, 2, 8);
  o.cycles = draw(rng, 5, 110);
  o.pairs = draw(rng, 0, 30);
  return generate_instance(o);
}

Instance free_star_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 7000);
  GeneratorOptions o;
  o.seed = seed + 7000;
  o.n = draw(rng, 8, 80);
  o.leaves = draw(rng, 2, 8);
  o.terminals = o.leaves;
  o.simple_fraction = 1.0;
  o.cycles = draw(rng, 5, 60);
  o.pairs = draw(rng, 1, 25);
  const Instance base = generate_instance(o);

  const int k = o.leaves;
  std::vector<EdgeRow> edges;
  std::vector<int> terminals;
  std::vector<std::vector<int>> subtrees;
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, k, 1, 0});
    terminals.push_back(static_cast<int>(
        base.net().terminals()[static_cast<std::size_t>(i)].value()));
    subtrees.push_back({i});
  }
  return Instance::with_default_names(
      base.net(), make_tree(k + 1, edges, terminals, subtrees));
}

Instance two_terminal_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed + 9000);
  GeneratorOptions o;
  o.seed = seed + 9000;
  o.n = draw(rng, 4, 80);
  o.leaves = 2;
  o.terminals = 2;
  o.simple_fraction = 1.0;
  o.cycles = draw(rng, 3, 60);
  o.pairs = draw(rng, 1, 20);
  const Instance base = generate_instance(o);
  const int s = static_cast<int>(base.net().terminals()[0].value());
  const int t = static_cast<int>(base.net().terminals()[1].value());
  return Instance::with_default_names(
      base.net(),
      make_tree(2, {{0, 1, draw_length(rng, 0), draw_length(rng, 0)}}, {s, t},
                {{0}, {1}}));
}

Instance reduction_instance(std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 rng(seed * 1000 + attempt);
    GeneratorOptions o;
    o.seed = seed * 1000 + attempt + 11000;
    o.n = draw(rng, 15, 120);
    o.leaves = draw(rng, 4, 8);
    o.terminals = draw(rng, 3, o.leaves + 3);
    o.linear_terminals = draw(rng, 1, 2);
    o.walks_end_at_linear = true;
    o.cover_leaves = false;
    o.hub_bias = 0.6;
    o.simple_fraction = 0.6;
    o.cycles = draw(rng, 5, 80);
    o.pairs = draw(rng, 1, 25);
    try {
      Instance instance = generate_instance(o);
      if (has_linear_terminal(instance) && has_high_degree_vertex(instance) &&
          has_bare_leaf(instance)) {
        return instance;
      }
    } catch (const InputError&) {
      // Too few walk endpoints for these parameters; draw again.
    }
  }
}

RealizationTree reweighted(const RealizationTree& real, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TreeEdge> edges(real.edges().begin(), real.edges().end());
  for (TreeEdge& e : edges) {
    if (e.len_uv != 0) e.len_uv = draw_length(rng, 1);
    if (e.len_vu != 0) e.len_vu = draw_length(rng, 1);
  }
  return RealizationTree(
      std::vector<TreeVertexId>(real.vertices().begin(), real.vertices().end()),
      std::move(edges), real.subtrees(), real.complexity_override());
}

namespace {

// AHU encoding of the tree rooted at `root`.
std::string encode(const std::vector<std::vector<int>>& adj, int root,
                   int parent) {
  std::vector<std::string> children;
  for (int w : adj[static_cast<std::size_t>(root)]) {
    if (w != parent) children.push_back(encode(adj, w, root));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  return out + ")";
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> all_trees(int max_vertices) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (int k = 1; k <= max_vertices; ++k) {
    std::set<std::string> seen;
    // Every tree arises from some parent array with parent[i] < i.
    std::vector<int> parent(static_cast<std::size_t>(k), 0);
    std::function<void(int)> fill = [&](int i) {
      if (i == k) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < k; ++v) {
          const int p = parent[static_cast<std::size_t>(v)];
          adj[static_cast<std::size_t>(v)].push_back(p);
          adj[static_cast<std::size_t>(p)].push_back(v);
          edges.emplace_back(p, v);
        }
        std::string best;
        for (int r = 0; r < k; ++r) {
          const std::string code = encode(adj, r, -1);
          if (best.empty() || code < best) best = code;
        }
        if (seen.insert(best).second) out.push_back(edges);
        return;
      }
      for (int p = 0; p < i; ++p) {
        parent[static_cast<std::size_t>(i)] = p;
        fill(i + 1);
      }
    };
    fill(1);
  }
  return out;
}

std::vector<std::vector<int>> connected_subtrees(
    int k, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < k; ++v) {
      if (mask >> v & 1u) members.push_back(v);
    }
    // A vertex subset of a tree is connected iff it spans |members| - 1 edges.
    int inside = 0;
    for (const auto& [u, v] : edges) {
      inside += (mask >> u & 1u) && (mask >> v & 1u);
    }
    if (inside + 1 == static_cast<int>(members.size())) out.push_back(members);
  }
  return out;
}

bool has_linear_terminal(const Instance& instance) {
  for (VertexId s : instance.net().terminals()) {
    if (classify_terminal(instance.real(), s) == TerminalKind::kLinear) {
      return true;
    }
  }
  return false;
}

bool has_high_degree_vertex(const Instance& instance) {
  for (TreeVertexId v : instance.real().vertices()) {
    if (instance.real().degree(v) >= 4) return true;
  }
  return false;
}

bool has_bare_leaf(const Instance& instance) {
  const RealizationTree& real = instance.real();
  for (TreeVertexId v : real.vertices()) {
    if (!real.is_leaf(v)) continue;
    bool hosts = false;
    for (VertexId s : instance.net().terminals()) {
      const auto sub = real.subtree(s);
      hosts = hosts || (sub.size() == 1 && sub[0] == v);
    }
    if (!hosts) return true;
  }
  return false;
}

}  // namespace muflow::testing
