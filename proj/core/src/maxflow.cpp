#include "muflow/maxflow.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <string>

namespace muflow {

namespace {

std::atomic<std::int64_t> g_maxflow_calls{0};

// Residual network over dense vertex indices plus a super source and a super
// sink. Original arc i owns residual edges 2i (forward) and 2i+1 (reverse).
class FlowEngine {
 public:
  FlowEngine(const Network& net, std::vector<Capacity> capacity)
      : graph_(net.graph()),
        n_(graph_.num_vertices()),
        source_(n_),
        sink_(n_ + 1),
        adj_(n_ + 2) {
    head_.reserve(2 * graph_.num_arcs());
    residual_.reserve(2 * graph_.num_arcs());
    original_ = std::move(capacity);
    infinity_ = 1;
    for (Capacity c : original_) infinity_ = checked_add(infinity_, c);
    for (std::size_t i = 0; i < graph_.num_arcs(); ++i) {
      const Arc& a = graph_.arc(i);
      add_edge(graph_.vertex_index(a.tail), graph_.vertex_index(a.head),
               original_[i]);
    }
    base_edges_ = head_.size();
  }

  Capacity augment(std::span<const VertexId> sources,
                   std::span<const VertexId> sinks) {
    ++g_maxflow_calls;
    std::vector<std::size_t> touched;
    for (VertexId s : sources) {
      const std::size_t v = graph_.vertex_index(s);
      add_edge(source_, v, infinity_);
      touched.push_back(v);
    }
    for (VertexId t : sinks) {
      const std::size_t v = graph_.vertex_index(t);
      add_edge(v, sink_, infinity_);
      touched.push_back(v);
    }
    Capacity total = 0;
    while (build_levels()) {
      next_.assign(n_ + 2, 0);
      while (Capacity pushed = push(source_, infinity_)) {
        total = checked_add(total, pushed);
      }
    }
    // Drop the super edges again; they were appended last everywhere.
    for (std::size_t v : touched) adj_[v].pop_back();
    adj_[source_].clear();
    adj_[sink_].clear();
    head_.resize(base_edges_);
    residual_.resize(base_edges_);
    return total;
  }

  FlowFunction flow() const {
    FlowFunction f;
    for (std::size_t i = 0; i < graph_.num_arcs(); ++i) {
      f.set(graph_.arc(i).id, original_[i] - residual_[2 * i]);
    }
    return f;
  }

 private:
  void add_edge(std::size_t from, std::size_t to, Capacity cap) {
    adj_[from].push_back(head_.size());
    head_.push_back(to);
    residual_.push_back(cap);
    adj_[to].push_back(head_.size());
    head_.push_back(from);
    residual_.push_back(0);
  }

  bool build_levels() {
    level_.assign(n_ + 2, -1);
    std::queue<std::size_t> q;
    level_[source_] = 0;
    q.push(source_);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t e : adj_[u]) {
        const std::size_t w = head_[e];
        if (residual_[e] > 0 && level_[w] < 0) {
          level_[w] = level_[u] + 1;
          q.push(w);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  Capacity push(std::size_t u, Capacity limit) {
    if (u == sink_) return limit;
    for (std::size_t& i = next_[u]; i < adj_[u].size(); ++i) {
      const std::size_t e = adj_[u][i];
      const std::size_t w = head_[e];
      if (residual_[e] <= 0 || level_[w] != level_[u] + 1) continue;
      if (Capacity got = push(w, std::min(limit, residual_[e]))) {
        residual_[e] -= got;
        residual_[e ^ 1] += got;
        return got;
      }
    }
    return 0;
  }

  const Digraph& graph_;
  std::size_t n_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> head_;
  std::vector<Capacity> residual_;
  std::vector<Capacity> original_;
  std::size_t base_edges_ = 0;
  Capacity infinity_ = 0;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

std::vector<Capacity> capacities_of(const Network& net) {
  std::vector<Capacity> c(net.graph().num_arcs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = net.capacity_at(i);
  return c;
}

void check_endpoint_sets(const Network& net, std::span<const VertexId> sources,
                         std::span<const VertexId> sinks) {
  if (sources.empty() || sinks.empty()) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "max flow needs nonempty source and sink sets");
  }
  const auto mask = vertex_mask(net.graph(), sources);
  for (VertexId t : sinks) {
    if (mask[net.graph().vertex_index(t)]) {
      throw InputError(InputErrorCode::kInvalidArgument,
                       "vertex " + std::to_string(t.value()) +
                           " is both a source and a sink");
    }
  }
}

}  // namespace

std::int64_t maxflow_call_count() { return g_maxflow_calls.load(); }

FlowFunction to_arc_function(const WeightedPathCollection& paths) {
  FlowFunction f;
  for (const WeightedPath& p : paths) {
    for (ArcId a : p.arcs) f.add(a, p.weight);
  }
  return f;
}

MaxFlowResult max_flow(const Network& net, std::span<const VertexId> sources,
                       std::span<const VertexId> sinks) {
  check_endpoint_sets(net, sources, sinks);
  FlowEngine engine(net, capacities_of(net));
  MaxFlowResult result;
  result.value = engine.augment(sources, sinks);
  result.flow = engine.flow();
  return result;
}

Cut min_cut_source_side(const Network& net, const FlowFunction& f,
                        std::span<const VertexId> sources,
                        std::span<const VertexId> sinks) {
  const Digraph& g = net.graph();
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<std::size_t> stack;
  for (VertexId s : sources) {
    const std::size_t v = g.vertex_index(s);
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t a : g.out_arcs(u)) {
      const std::size_t w = g.vertex_index(g.arc(a).head);
      if (!seen[w] && f[g.arc(a).id] < net.capacity_at(a)) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    for (std::size_t a : g.in_arcs(u)) {
      const std::size_t w = g.vertex_index(g.arc(a).tail);
      if (!seen[w] && f[g.arc(a).id] > 0) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (VertexId t : sinks) {
    MUFLOW_ENSURE(!seen[g.vertex_index(t)], "flow is not maximum: sink " +
                                                std::to_string(t.value()) +
                                                " is residual-reachable");
  }
  std::vector<VertexId> side;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (seen[v]) side.push_back(g.vertex(v));
  }
  return Cut(std::move(side));
}

FlowFunction lex_max_flow(const Network& net, VertexId source,
                          VertexId primary_sink,
                          std::span<const VertexId> secondary_sinks) {
  std::vector<VertexId> all_sinks(secondary_sinks.begin(),
                                  secondary_sinks.end());
  all_sinks.push_back(primary_sink);
  const VertexId src[] = {source};
  check_endpoint_sets(net, src, all_sinks);
  const auto secondary_mask = vertex_mask(net.graph(), secondary_sinks);
  if (secondary_mask[net.graph().vertex_index(primary_sink)]) {
    throw InputError(InputErrorCode::kInvalidArgument,
                     "primary sink listed as a secondary sink");
  }

  const Digraph& g = net.graph();
  std::vector<Capacity> capacity = capacities_of(net);
  for (std::size_t a : g.out_arcs(g.vertex_index(primary_sink))) {
    capacity[a] = 0;
  }
  FlowEngine engine(net, std::move(capacity));
  const VertexId primary[] = {primary_sink};
  engine.augment(src, primary);
  engine.augment(src, all_sinks);
  return engine.flow();
}

WeightedPathCollection decompose(const Network& net, const FlowFunction& f,
                                 std::span<const VertexId> allowed_sources,
                                 std::span<const VertexId> allowed_sinks) {
  const Digraph& g = net.graph();
  const std::size_t n = g.num_vertices();
  std::vector<Capacity> residual(g.num_arcs(), 0);
  for (const auto& [id, value] : f.values()) {
    MUFLOW_ENSURE(value >= 0, "negative arc value in decomposition input");
    residual[g.arc_index(id)] = value;
  }
  std::vector<Capacity> excess(n, 0);
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    if (residual[i] == 0) continue;
    const std::size_t t = g.vertex_index(g.arc(i).tail);
    const std::size_t h = g.vertex_index(g.arc(i).head);
    excess[t] = checked_add(excess[t], residual[i]);
    excess[h] = checked_add(excess[h], -residual[i]);
  }
  const auto source_ok = vertex_mask(g, allowed_sources);
  const auto sink_ok = vertex_mask(g, allowed_sinks);
  for (std::size_t v = 0; v < n; ++v) {
    MUFLOW_ENSURE(excess[v] <= 0 || source_ok[v],
                  "positive divergence at non-source vertex " +
                      std::to_string(g.vertex(v).value()));
    MUFLOW_ENSURE(excess[v] >= 0 || sink_ok[v],
                  "negative divergence at non-sink vertex " +
                      std::to_string(g.vertex(v).value()));
  }

  std::vector<std::size_t> next(n, 0);
  std::vector<long> position(n, -1);
  auto next_arc = [&](std::size_t u) -> long {
    auto out = g.out_arcs(u);
    std::size_t& i = next[u];
    while (i < out.size() && residual[out[i]] == 0) ++i;
    return i < out.size() ? static_cast<long>(out[i]) : -1;
  };

  WeightedPathCollection paths;
  std::vector<std::size_t> walk_vertices;
  std::vector<std::size_t> walk_arcs;
  for (std::size_t s = 0; s < n; ++s) {
    while (excess[s] > 0) {
      walk_vertices.assign(1, s);
      walk_arcs.clear();
      position[s] = 0;
      std::size_t u = s;
      while (u == s || excess[u] >= 0) {
        const long a = next_arc(u);
        MUFLOW_ENSURE(a >= 0, "flow conservation broken at vertex " +
                                  std::to_string(g.vertex(u).value()));
        const std::size_t w = g.vertex_index(g.arc(a).head);
        if (position[w] >= 0) {
          // Closed walk w -> ... -> u -> w: drop it.
          const std::size_t from = static_cast<std::size_t>(position[w]);
          Capacity amount = residual[a];
          for (std::size_t k = from; k < walk_arcs.size(); ++k) {
            amount = std::min(amount, residual[walk_arcs[k]]);
          }
          residual[a] -= amount;
          for (std::size_t k = from; k < walk_arcs.size(); ++k) {
            residual[walk_arcs[k]] -= amount;
          }
          for (std::size_t k = from + 1; k < walk_vertices.size(); ++k) {
            position[walk_vertices[k]] = -1;
          }
          walk_vertices.resize(from + 1);
          walk_arcs.resize(from);
          u = w;
          continue;
        }
        position[w] = static_cast<long>(walk_vertices.size());
        walk_vertices.push_back(w);
        walk_arcs.push_back(static_cast<std::size_t>(a));
        u = w;
      }
      Capacity amount = std::min(excess[s], -excess[u]);
      for (std::size_t a : walk_arcs) amount = std::min(amount, residual[a]);
      WeightedPath path;
      path.from = g.vertex(s);
      path.to = g.vertex(u);
      path.weight = amount;
      path.arcs.reserve(walk_arcs.size());
      for (std::size_t a : walk_arcs) {
        residual[a] -= amount;
        path.arcs.push_back(g.arc(a).id);
      }
      excess[s] -= amount;
      excess[u] += amount;
      for (std::size_t v : walk_vertices) position[v] = -1;
      paths.push_back(std::move(path));
    }
  }
  return paths;
}

}  // namespace muflow
