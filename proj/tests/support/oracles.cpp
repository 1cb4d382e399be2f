#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace muflow::testing {

Capacity oracle_max_flow(const Network& net, std::span<const VertexId> sources,
                         std::span<const VertexId> sinks) {
  const Digraph& g = net.graph();
  const std::size_t n = g.num_vertices() + 2;
  const std::size_t src = n - 2;
  const std::size_t dst = n - 1;
  constexpr Capacity kInf = std::numeric_limits<Capacity>::max() / 4;
  // Residual edges in pairs: edge e and its reverse e ^ 1.
  std::vector<std::size_t> head;
  std::vector<Capacity> residual;
  std::vector<std::vector<std::size_t>> out(n);
  auto link = [&](std::size_t u, std::size_t v, Capacity c) {
    out[u].push_back(head.size());
    head.push_back(v);
    residual.push_back(c);
    out[v].push_back(head.size());
    head.push_back(u);
    residual.push_back(0);
  };
  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    const Arc& a = g.arc(i);
    link(g.vertex_index(a.tail), g.vertex_index(a.head), net.capacity_at(i));
  }
  for (VertexId s : sources) link(src, g.vertex_index(s), kInf);
  for (VertexId t : sinks) link(g.vertex_index(t), dst, kInf);

  Capacity total = 0;
  for (;;) {
    std::vector<std::size_t> via(n, 0);
    std::vector<char> seen(n, 0);
    seen[src] = 1;
    std::deque<std::size_t> queue{src};
    while (!queue.empty() && !seen[dst]) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t e : out[u]) {
        if (residual[e] > 0 && !seen[head[e]]) {
          seen[head[e]] = 1;
          via[head[e]] = e;
          queue.push_back(head[e]);
        }
      }
    }
    if (!seen[dst]) return total;
    Capacity push = kInf;
    for (std::size_t v = dst; v != src; v = head[via[v] ^ 1]) {
      push = std::min(push, residual[via[v]]);
    }
    for (std::size_t v = dst; v != src; v = head[via[v] ^ 1]) {
      residual[via[v]] -= push;
      residual[via[v] ^ 1] += push;
    }
    total += push;
  }
}

TreeMetric::TreeMetric(const RealizationTree& real, const TreeArc* bumped)
    : ids_(real.vertices().begin(), real.vertices().end()) {
  boost::multiprecision::cpp_int lcm = 1;
  for (const TreeEdge& e : real.edges()) {
    for (const Rational* len : {&e.len_uv, &e.len_vu}) {
      lcm = boost::multiprecision::lcm(lcm, denominator(*len));
    }
  }
  if (lcm > 1'000'000)
    throw std::runtime_error("oracle: denominators too large");
  scale_ = lcm.convert_to<std::int64_t>();

  const std::size_t n = ids_.size();
  // Adjacency with scaled lengths, built from the edge list alone.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (const TreeEdge& e : real.edges()) {
    auto scaled = [&](const Rational& len, TreeVertexId from, TreeVertexId to) {
      const Rational x = len * scale_;
      std::int64_t out = numerator(x).convert_to<std::int64_t>();
      if (bumped != nullptr && bumped->from == from && bumped->to == to) {
        out += 1;
      }
      return out;
    };
    adj[index(e.u)].emplace_back(index(e.v), scaled(e.len_uv, e.u, e.v));
    adj[index(e.v)].emplace_back(index(e.u), scaled(e.len_vu, e.v, e.u));
  }
  d_.assign(n, std::vector<std::int64_t>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    d_[s][s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (const auto& [v, len] : adj[u]) {
        if (d_[s][v] >= 0) continue;
        d_[s][v] = d_[s][u] + len;
        stack.push_back(v);
      }
    }
  }
}

std::size_t TreeMetric::index(TreeVertexId v) const {
  return static_cast<std::size_t>(std::find(ids_.begin(), ids_.end(), v) -
                                  ids_.begin());
}

Rational TreeMetric::distance(TreeVertexId x, TreeVertexId y) const {
  return Rational(d_[index(x)][index(y)], scale_);
}

std::int64_t TreeMetric::scaled_mu(const RealizationTree& real, VertexId s,
                                   VertexId t) const {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (TreeVertexId u : real.subtree(s)) {
    for (TreeVertexId v : real.subtree(t)) {
      best = std::min(best, d_[index(u)][index(v)]);
    }
  }
  return best;
}

Rational TreeMetric::mu(const RealizationTree& real, VertexId s,
                        VertexId t) const {
  if (s == t) return 0;
  return Rational(scaled_mu(real, s, t), scale_);
}

std::vector<std::pair<VertexId, VertexId>> oracle_pi(
    const RealizationTree& real, std::span<const VertexId> terminals,
    TreeArc a) {
  const TreeMetric base(real);
  const TreeMetric bumped(real, &a);
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId s : terminals) {
    for (VertexId t : terminals) {
      if (s == t) continue;
      if (bumped.scaled_mu(real, s, t) > base.scaled_mu(real, s, t)) {
        out.emplace_back(s, t);
      }
    }
  }
  return out;
}

Rational oracle_dual(const Network& net, const RealizationTree& real) {
  Rational total = 0;
  for (const TreeEdge& e : real.edges()) {
    for (const TreeArc a : {TreeArc{e.u, e.v}, TreeArc{e.v, e.u}}) {
      const Rational& len = a.from == e.u ? e.len_uv : e.len_vu;
      if (len == 0) continue;
      std::set<VertexId> sources;
      std::set<VertexId> sinks;
      for (const auto& [s, t] : oracle_pi(real, net.terminals(), a)) {
        sources.insert(s);
        sinks.insert(t);
      }
      if (sources.empty()) continue;
      const std::vector<VertexId> src(sources.begin(), sources.end());
      const std::vector<VertexId> dst(sinks.begin(), sinks.end());
      total += len * oracle_max_flow(net, src, dst);
    }
  }
  return total;
}

}  // namespace muflow::testing
