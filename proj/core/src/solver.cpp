#include "muflow/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "flow_util.hpp"
#include "muflow/certify.hpp"
#include "muflow/validate.hpp"

namespace muflow {

namespace {

using internal::complement;
using internal::complement_set;
using internal::expand_cut;

bool subtree_within(const RealizationTree& real, VertexId s,
                    const std::vector<char>& side, bool value) {
  for (TreeVertexId v : real.subtree(s)) {
    if ((side[real.vertex_index(v)] != 0) != value) return false;
  }
  return true;
}

// Tree of one partition child: the kept side plus the edge to `across`, which
// now stands for the whole other side and hosts the contraction vertex z.
RealizationTree child_tree(const RealizationTree& real,
                           const std::vector<char>& keep, TreeEdgeId cut_edge,
                           TreeVertexId across, const Network& child,
                           VertexId z) {
  auto kept = [&](TreeVertexId v) { return keep[real.vertex_index(v)] != 0; };
  std::vector<TreeVertexId> vertices{across};
  for (TreeVertexId v : real.vertices()) {
    if (kept(v)) vertices.push_back(v);
  }
  std::vector<TreeEdge> edges;
  for (const TreeEdge& e : real.edges()) {
    if (e.id == cut_edge || (kept(e.u) && kept(e.v))) edges.push_back(e);
  }
  RealizationTree::SubtreeMap subtrees;
  std::set<VertexId> overrides;
  for (VertexId s : child.terminals()) {
    if (s == z) {
      subtrees[s] = {across};
      continue;
    }
    std::vector<TreeVertexId> sub;
    bool spans = false;
    for (TreeVertexId v : real.subtree(s)) {
      if (kept(v)) {
        sub.push_back(v);
      } else {
        spans = true;
      }
    }
    MUFLOW_ENSURE(!sub.empty(), "terminal ended up on the wrong side");
    if (spans) {
      sub.push_back(across);
      overrides.insert(s);
    } else if (real.complexity_override().contains(s)) {
      overrides.insert(s);
    }
    subtrees[s] = std::move(sub);
  }
  return RealizationTree(std::move(vertices), std::move(edges),
                         std::move(subtrees), std::move(overrides));
}

SubSolution partition_step(const Network& net, const RealizationTree& real,
                           TreeEdgeId edge_id, IdPool& ids, int threads) {
  const TreeEdge& e = real.edge(edge_id);
  const TreeArc forward{e.u, e.v};
  const std::vector<char> side1 = real.side_of(forward);
  std::vector<char> side2(side1.size());
  std::transform(side1.begin(), side1.end(), side2.begin(),
                 [](char c) { return static_cast<char>(!c); });

  std::vector<VertexId> s1;
  std::vector<VertexId> s2;
  for (VertexId s : net.terminals()) {
    if (subtree_within(real, s, side1, true)) s1.push_back(s);
    if (subtree_within(real, s, side2, true)) s2.push_back(s);
  }
  MUFLOW_ENSURE(!s1.empty() && !s2.empty(), "degenerate partition edge");

  const MaxFlowResult mf = max_flow(net, s1, s2);
  const Cut x1 = min_cut_source_side(net, mf.flow, s1, s2);
  const std::vector<VertexId> x2 =
      complement_set(net.graph(), x1.source_side());
  const VertexId z1 = ids.vertex();
  const VertexId z2 = ids.vertex();

  const Network net1 = contract(net, x2, z2);
  const Network net2 = contract(net, x1.source_side(), z1);
  const RealizationTree real1 = child_tree(real, side1, e.id, e.v, net1, z2);
  const RealizationTree real2 = child_tree(real, side2, e.id, e.u, net2, z1);

  SubSolution sol1;
  SubSolution sol2;
  if (threads > 1) {
    IdPool ids2 = ids;
    auto pending = std::async(std::launch::async, [&] {
      return solve_reduced(net2, real2, ids2, threads / 2);
    });
    sol1 = solve_reduced(net1, real1, ids, threads - threads / 2);
    sol2 = pending.get();
  } else {
    sol1 = solve_reduced(net1, real1, ids, 1);
    sol2 = solve_reduced(net2, real2, ids, 1);
  }

  SubSolution out;
  out.multiflow =
      aggregate(net, x1.source_side(), z1, z2, sol1.multiflow, sol2.multiflow);
  out.certificate.cuts[forward] = x1;
  out.certificate.cuts[forward.reversed()] = Cut(x2);
  for (const auto& [arc, cut] : sol1.certificate.cuts) {
    if (arc == forward || arc == forward.reversed()) continue;
    out.certificate.cuts[arc] = expand_cut(cut, z2, x2);
  }
  for (const auto& [arc, cut] : sol2.certificate.cuts) {
    if (arc == forward || arc == forward.reversed()) continue;
    out.certificate.cuts[arc] = expand_cut(cut, z1, x1.source_side());
  }
  out.depth = 1 + std::max(sol1.depth, sol2.depth);
  return out;
}

// Every inner tree vertex of degree 2 gets a pendant zero-length leaf with an
// isolated dummy terminal, so that all inner vertices have degree 3.
std::pair<Network, RealizationTree> pad_degree_two(const Network& net,
                                                   const RealizationTree& real,
                                                   IdPool& ids) {
  std::vector<TreeVertexId> vertices(real.vertices().begin(),
                                     real.vertices().end());
  std::vector<TreeEdge> edges(real.edges().begin(), real.edges().end());
  RealizationTree::SubtreeMap subtrees = real.subtrees();
  std::vector<VertexId> graph_vertices(net.graph().vertices().begin(),
                                       net.graph().vertices().end());
  std::vector<VertexId> terminals(net.terminals().begin(),
                                  net.terminals().end());
  bool changed = false;
  for (TreeVertexId v : real.vertices()) {
    if (real.degree(v) != 2) continue;
    const TreeVertexId leaf = ids.tree_vertex();
    const VertexId dummy = ids.vertex();
    vertices.push_back(leaf);
    edges.push_back({ids.tree_edge(), v, leaf, 0, 0});
    graph_vertices.push_back(dummy);
    terminals.push_back(dummy);
    subtrees[dummy] = {leaf};
    changed = true;
  }
  if (!changed) return {net, real};
  return {
      Network(std::move(graph_vertices), net.arc_specs(), std::move(terminals)),
      RealizationTree(std::move(vertices), std::move(edges),
                      std::move(subtrees), real.complexity_override())};
}

}  // namespace

SubSolution base_two_vertices(const Network& net, const RealizationTree& real) {
  MUFLOW_ENSURE(real.vertices().size() == 2, "tree must have one edge");
  const TreeVertexId v1 = real.vertices()[0];
  const TreeVertexId v2 = real.vertices()[1];
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  for (VertexId s : net.terminals()) {
    const auto sub = real.subtree(s);
    if (sub.size() != 1) continue;
    (sub[0] == v1 ? sources : sinks).push_back(s);
  }
  SubSolution out;
  if (sources.empty() || sinks.empty()) return out;

  const MaxFlowResult mf = max_flow(net, sources, sinks);
  const Cut x = min_cut_source_side(net, mf.flow, sources, sinks);
  out.multiflow.add_paths(decompose(net, mf.flow, sources, sinks));
  std::vector<VertexId> ends = sources;
  ends.insert(ends.end(), sinks.begin(), sinks.end());
  out.multiflow.add_paths(decompose(net, complement(net, mf.flow), ends, ends));
  out.certificate.cuts[{v1, v2}] = x;
  out.certificate.cuts[{v2, v1}] =
      Cut(complement_set(net.graph(), x.source_side()));
  return out;
}

SubSolution solve_reduced(const Network& net, const RealizationTree& real,
                          IdPool& ids, int threads) {
  const std::size_t size = real.vertices().size();
  if (size <= 1) return {};
  if (size == 2) return base_two_vertices(net, real);
  if (const auto edge = choose_balanced_edge(real)) {
    return partition_step(net, real, *edge, ids, threads);
  }
  return base_three_leaves(net, real, ids);
}

SolveOutput solve(const Network& net, const RealizationTree& real,
                  const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::int64_t calls_before = maxflow_call_count();

  const ValidationReport report = validate_instance(net, real);
  if (!report.ok()) {
    throw InputError(InputErrorCode::kNotEulerian, report.reason);
  }
  IdPool ids = IdPool::after(net, real);
  const ReducedInstance reduced = normalize(net, real, ids);
  const auto [padded_net, padded_real] =
      pad_degree_two(reduced.net, reduced.real, ids);
  const SubSolution sub =
      solve_reduced(padded_net, padded_real, ids, std::max(1, options.threads));

  SolveOutput out;
  out.multiflow = pull_back_multiflow(reduced.undo, sub.multiflow);
  out.certificate = pull_back_certificate(reduced.undo, net, real, reduced.real,
                                          sub.certificate);
  out.value = mu_value(net, real, out.multiflow);
  if (options.verify) {
    const CertificateReport check =
        verify_certificate(net, real, out.multiflow, out.certificate);
    MUFLOW_ENSURE(check.ok(), "solver output failed verification: " +
                                  to_string(check.status) + ": " +
                                  check.reason);
  }
  out.stats.n = net.graph().num_vertices();
  out.stats.m = net.graph().num_arcs();
  out.stats.leaf_count = real.leaf_count();
  out.stats.recursion_depth = sub.depth;
  out.stats.maxflow_calls = maxflow_call_count() - calls_before;
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return out;
}

}  // namespace muflow
