#include "muflow/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace muflow {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool coin(double p) {
    return std::uniform_real_distribution<double>(0, 1)(engine_) < p;
  }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(
        uniform(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

struct TreeDraft {
  std::vector<std::vector<int>> adjacency;
  std::vector<std::pair<int, int>> edges;

  int add_vertex() {
    adjacency.emplace_back();
    return static_cast<int>(adjacency.size()) - 1;
  }
  void connect(int u, int v) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
    edges.emplace_back(u, v);
  }
  int leaf_count() const {
    return static_cast<int>(
        std::count_if(adjacency.begin(), adjacency.end(),
                      [](const std::vector<int>& a) { return a.size() == 1; }));
  }
  std::vector<int> with_degree(bool leaf) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(adjacency.size()); ++v) {
      if ((adjacency[v].size() == 1) == leaf) out.push_back(v);
    }
    return out;
  }
  int hub() const {
    int best = 0;
    for (int v = 1; v < static_cast<int>(adjacency.size()); ++v) {
      if (adjacency[v].size() > adjacency[best].size()) best = v;
    }
    return best;
  }
};

// Grows a tree with exactly `leaves` leaves and about `extra` vertices more
// than that requires.
TreeDraft grow_tree(Rng& rng, int leaves, int extra, double hub_bias) {
  TreeDraft t;
  t.connect(t.add_vertex(), t.add_vertex());
  while (t.leaf_count() < leaves || extra > 0) {
    const std::vector<int> inner = t.with_degree(false);
    const bool branch = t.leaf_count() < leaves && !inner.empty() &&
                        (extra == 0 || rng.coin(0.5));
    if (branch) {
      const int at = rng.coin(hub_bias) ? t.hub() : rng.pick(inner);
      t.connect(at, t.add_vertex());
      continue;
    }
    // Lengthen: hang a vertex below a leaf.
    const int at = rng.pick(t.with_degree(true));
    t.connect(at, t.add_vertex());
    extra = std::max(0, extra - 1);
  }
  return t;
}

Rational random_length(Rng& rng) {
  return Rational(rng.uniform(0, 5), rng.uniform(1, 3));
}

std::vector<int> random_subtree(Rng& rng, const TreeDraft& t) {
  const int size = static_cast<int>(t.adjacency.size());
  const int want = rng.uniform(2, std::min(4, size));
  std::vector<int> sub{rng.uniform(0, size - 1)};
  while (static_cast<int>(sub.size()) < want) {
    std::vector<int> frontier;
    for (int v : sub) {
      for (int w : t.adjacency[v]) {
        if (std::find(sub.begin(), sub.end(), w) == sub.end()) {
          frontier.push_back(w);
        }
      }
    }
    sub.push_back(rng.pick(frontier));
  }
  return sub;
}

class ArcBuilder {
 public:
  ArcBuilder(Rng& rng, double parallel_rate)
      : rng_(rng), parallel_rate_(parallel_rate) {}

  void step(int u, int v) {
    auto& existing = by_pair_[{u, v}];
    if (existing.empty() || rng_.coin(parallel_rate_)) {
      existing.push_back(add(u, v, 0));
    }
    ++specs_[rng_.pick(existing)].capacity;
  }
  std::size_t add(int u, int v, Capacity c) {
    specs_.push_back({ArcId(static_cast<std::int64_t>(specs_.size())),
                      VertexId(u), VertexId(v), c});
    return specs_.size() - 1;
  }
  std::size_t size() const { return specs_.size(); }
  std::vector<ArcSpec> take() { return std::move(specs_); }

 private:
  Rng& rng_;
  double parallel_rate_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_pair_;
  std::vector<ArcSpec> specs_;
};

// Random vertex different from `avoid` and `avoid2` (either may be -1).
int other_vertex(Rng& rng, int n, int avoid, int avoid2 = -1) {
  for (;;) {
    const int v = rng.uniform(0, n - 1);
    if (v != avoid && v != avoid2) return v;
  }
}

}  // namespace

Instance generate_instance(const GeneratorOptions& o) {
  if (o.n < 2 || o.leaves < 2 || o.cycles < 0 || o.pairs < 0 ||
      o.min_walk < 2 || o.max_walk < o.min_walk || o.linear_terminals < 0) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "generator needs n >= 2, leaves >= 2, nonnegative walk "
                     "counts and 2 <= min_walk <= max_walk");
  }
  const int terminal_count =
      o.terminals > 0 ? o.terminals : std::min(o.n, 2 * o.leaves);
  if (terminal_count > o.n) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "more terminals than vertices");
  }
  Rng rng(o.seed);

  const int extra = rng.uniform(
      0, o.extra_tree_vertices >= 0 ? o.extra_tree_vertices : o.leaves);
  const TreeDraft draft = grow_tree(rng, o.leaves, extra, o.hub_bias);
  std::vector<std::pair<Rational, Rational>> lengths;
  for (std::size_t i = 0; i < draft.edges.size(); ++i) {
    Rational a = random_length(rng);
    Rational b = random_length(rng);
    lengths.emplace_back(std::move(a), std::move(b));
  }

  std::vector<int> graph_order(static_cast<std::size_t>(o.n));
  std::iota(graph_order.begin(), graph_order.end(), 0);
  std::shuffle(graph_order.begin(), graph_order.end(), rng.engine());
  std::vector<int> tree_leaves = draft.with_degree(true);
  std::shuffle(tree_leaves.begin(), tree_leaves.end(), rng.engine());

  RealizationTree::SubtreeMap subtrees;
  std::vector<VertexId> terminals;
  const int covered =
      o.cover_leaves
          ? std::min(terminal_count, static_cast<int>(tree_leaves.size()))
          : 0;
  const int tree_size = static_cast<int>(draft.adjacency.size());
  for (int i = 0; i < terminal_count; ++i) {
    const VertexId s(graph_order[static_cast<std::size_t>(i)]);
    terminals.push_back(s);
    std::vector<int> sub;
    if (i < covered) {
      sub = {tree_leaves[static_cast<std::size_t>(i)]};
    } else if (i < covered + o.linear_terminals) {
      const int e = rng.uniform(0, static_cast<int>(draft.edges.size()) - 1);
      auto& [uv, vu] = lengths[static_cast<std::size_t>(e)];
      (rng.coin(0.5) ? uv : vu) = 0;
      sub = {draft.edges[static_cast<std::size_t>(e)].first,
             draft.edges[static_cast<std::size_t>(e)].second};
    } else if (rng.coin(o.simple_fraction)) {
      sub = {rng.uniform(0, tree_size - 1)};
    } else {
      sub = random_subtree(rng, draft);
    }
    auto& ids = subtrees[s];
    for (int v : sub) ids.emplace_back(v);
  }

  std::vector<TreeVertexId> tree_vertices;
  for (int v = 0; v < tree_size; ++v) tree_vertices.emplace_back(v);
  std::vector<TreeEdge> tree_edges;
  for (std::size_t i = 0; i < draft.edges.size(); ++i) {
    tree_edges.push_back({TreeEdgeId(static_cast<std::int64_t>(i)),
                          TreeVertexId(draft.edges[i].first),
                          TreeVertexId(draft.edges[i].second), lengths[i].first,
                          lengths[i].second});
  }
  RealizationTree real(std::move(tree_vertices), std::move(tree_edges),
                       std::move(subtrees));

  std::vector<int> endpoints;
  for (VertexId s : terminals) {
    const TerminalKind kind = classify_terminal(real, s);
    if (kind == TerminalKind::kSimple ||
        (o.walks_end_at_linear && kind == TerminalKind::kLinear)) {
      endpoints.push_back(static_cast<int>(s.value()));
    }
  }
  if (o.pairs > 0 && endpoints.size() < 2) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "open walks need at least two simple terminals");
  }

  ArcBuilder arcs(rng, o.parallel_rate);
  for (int c = 0; c < o.cycles; ++c) {
    const int len = o.n == 2 ? 2 : rng.uniform(o.min_walk, o.max_walk);
    std::vector<int> walk{rng.uniform(0, o.n - 1)};
    for (int i = 1; i < len; ++i) {
      const bool last = i == len - 1;
      walk.push_back(other_vertex(rng, o.n, walk.back(), last ? walk[0] : -1));
    }
    for (std::size_t i = 0; i < walk.size(); ++i) {
      arcs.step(walk[i], walk[(i + 1) % walk.size()]);
    }
  }
  for (int p = 0; p < o.pairs; ++p) {
    const int s = rng.pick(endpoints);
    int t = s;
    while (t == s) t = rng.pick(endpoints);
    const int len = o.n == 2 ? 1 : rng.uniform(o.min_walk, o.max_walk);
    std::vector<int> walk{s};
    for (int i = 1; i < len; ++i) {
      const bool last = i == len - 1;
      walk.push_back(other_vertex(rng, o.n, walk.back(), last ? t : -1));
    }
    walk.push_back(t);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      arcs.step(walk[i], walk[i + 1]);
    }
  }
  const auto zero_arcs =
      static_cast<int>(o.zero_arc_rate * static_cast<double>(arcs.size()));
  for (int i = 0; i < zero_arcs; ++i) {
    const int u = rng.uniform(0, o.n - 1);
    arcs.add(u, other_vertex(rng, o.n, u), 0);
  }

  std::vector<VertexId> vertices;
  for (int v = 0; v < o.n; ++v) vertices.emplace_back(v);
  Network net(std::move(vertices), arcs.take(), std::move(terminals));
  return Instance::with_default_names(std::move(net), std::move(real));
}

Instance generate_instance(std::uint64_t seed, int n, int cycles, int pairs,
                           int leaves) {
  GeneratorOptions o;
  o.seed = seed;
  o.n = n;
  o.cycles = cycles;
  o.pairs = pairs;
  o.leaves = leaves;
  return generate_instance(o);
}

}  // namespace muflow
