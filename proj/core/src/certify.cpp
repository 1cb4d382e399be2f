#include "muflow/certify.hpp"

#include <algorithm>
#include <set>

#include "muflow/maxflow.hpp"

namespace muflow {

namespace {

std::string arc_text(const TreeArc& a) {
  return "(" + std::to_string(a.from.value()) + "," +
         std::to_string(a.to.value()) + ")";
}

CertificateReport fail(CertificateStatus status, std::optional<TreeArc> a,
                       std::string reason) {
  return {status, a, std::move(reason)};
}

bool contains_sorted(std::span<const VertexId> xs, VertexId v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

}  // namespace

Rational mu_value(const Network& net, const RealizationTree& real,
                  const Multiflow& f) {
  Rational total = 0;
  for (const auto& [pair, flow] : f.components()) {
    const Capacity v = Multiflow::value_of(net, flow, pair.first);
    if (v != 0) total += mu(real, pair.first, pair.second) * v;
  }
  return total;
}

FeasibilityReport check_feasible(const Network& net, const Multiflow& f) {
  const Digraph& g = net.graph();
  FlowFunction sum;
  for (const auto& [pair, flow] : f.components()) {
    const auto [s, t] = pair;
    if (!net.is_terminal(s) || !net.is_terminal(t) || s == t) {
      return {std::nullopt, pair, "component endpoints are not two terminals"};
    }
    for (const auto& [a, x] : flow.values()) {
      if (!g.has_arc(a)) return {a, pair, "flow on an unknown arc"};
      if (x < 0) return {a, pair, "negative flow"};
      sum.add(a, x);
    }
    // Divergence may only be nonzero at the endpoints, with the right signs.
    std::map<VertexId, Capacity> div;
    for (const auto& [a, x] : flow.values()) {
      const Arc& arc = g.arc(g.arc_index(a));
      div[arc.tail] += x;
      div[arc.head] -= x;
    }
    for (const auto& [v, d] : div) {
      if (d == 0) continue;
      if ((v == s && d > 0) || (v == t && d < 0)) continue;
      return {std::nullopt, pair,
              "flow not conserved at vertex " + std::to_string(v.value())};
    }
    if (div[s] != -div[t]) {
      return {std::nullopt, pair, "source and sink values differ"};
    }
  }
  for (const auto& [a, x] : sum.values()) {
    if (x > net.capacity(a)) return {a, std::nullopt, "capacity exceeded"};
  }
  return {};
}

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kOk:
      return "ok";
    case CertificateStatus::kInfeasible:
      return "infeasible multiflow";
    case CertificateStatus::kMissingCut:
      return "missing cut";
    case CertificateStatus::kInvalidCut:
      return "invalid cut";
    case CertificateStatus::kSeparation:
      return "cut does not separate";
    case CertificateStatus::kMultipleCrossings:
      return "path crosses cut twice";
    case CertificateStatus::kUnsaturated:
      return "cut not saturated";
    case CertificateStatus::kValueMismatch:
      return "value mismatch";
  }
  return "unknown";
}

CertificateReport verify_certificate(const Network& net,
                                     const RealizationTree& real,
                                     const Multiflow& f,
                                     const Certificate& cert) {
  const FeasibilityReport feasible = check_feasible(net, f);
  if (!feasible.ok()) {
    return fail(CertificateStatus::kInfeasible, std::nullopt, feasible.reason);
  }
  const Digraph& g = net.graph();
  const WeightedPathCollection paths = to_paths(net, f);

  for (const TreeArc& a : real.arcs()) {
    // A zero-length arc adds nothing to either side of the bound.
    if (real.length(a) == 0) continue;
    const PiSet pi = pi_set(real, net.terminals(), a);
    if (pi.empty()) continue;
    auto it = cert.cuts.find(a);
    if (it == cert.cuts.end()) {
      return fail(CertificateStatus::kMissingCut, a,
                  "no cut for tree arc " + arc_text(a));
    }
    const Cut& x = it->second;
    for (VertexId v : x.source_side()) {
      if (!g.has_vertex(v)) {
        return fail(CertificateStatus::kInvalidCut, a,
                    "cut names unknown vertex " + std::to_string(v.value()));
      }
    }
    for (VertexId s : pi.tail_side) {
      if (!x.contains(s)) {
        return fail(CertificateStatus::kSeparation, a,
                    "terminal " + std::to_string(s.value()) +
                        " should be inside the cut of " + arc_text(a));
      }
    }
    for (VertexId t : pi.head_side) {
      if (x.contains(t)) {
        return fail(CertificateStatus::kSeparation, a,
                    "terminal " + std::to_string(t.value()) +
                        " should be outside the cut of " + arc_text(a));
      }
    }

    const std::vector<char> inside = vertex_mask(g, x.source_side());
    auto crosses_out = [&](const Arc& arc) {
      return inside[g.vertex_index(arc.tail)] &&
             !inside[g.vertex_index(arc.head)];
    };
    auto crosses_in = [&](const Arc& arc) {
      return !inside[g.vertex_index(arc.tail)] &&
             inside[g.vertex_index(arc.head)];
    };
    FlowFunction filled;
    for (const WeightedPath& p : paths) {
      int crossings = 0;
      for (ArcId id : p.arcs) {
        const Arc& arc = g.arc(g.arc_index(id));
        crossings += crosses_out(arc) || crosses_in(arc);
      }
      if (crossings > 1) {
        return fail(CertificateStatus::kMultipleCrossings, a,
                    "a path from " + std::to_string(p.from.value()) + " to " +
                        std::to_string(p.to.value()) + " crosses the cut of " +
                        arc_text(a) + " " + std::to_string(crossings) +
                        " times");
      }
      if (!contains_sorted(pi.tail_side, p.from) ||
          !contains_sorted(pi.head_side, p.to)) {
        continue;
      }
      for (ArcId id : p.arcs) filled.add(id, p.weight);
    }
    for (std::size_t i = 0; i < g.num_arcs(); ++i) {
      const Arc& arc = g.arc(i);
      if (!crosses_out(arc)) continue;
      if (filled[arc.id] != net.capacity_at(i)) {
        return fail(CertificateStatus::kUnsaturated, a,
                    "arc " + std::to_string(arc.id.value()) +
                        " leaving the cut of " + arc_text(a) + " carries " +
                        std::to_string(filled[arc.id]) + " of " +
                        std::to_string(net.capacity_at(i)));
      }
    }
  }

  const Rational primal = mu_value(net, real, f);
  const Rational bound = certificate_value(net, real, cert);
  if (primal != bound) {
    return fail(CertificateStatus::kValueMismatch, std::nullopt,
                "mu-value " + format_rational(primal) +
                    " differs from cut value " + format_rational(bound));
  }
  return {};
}

Rational certificate_value(const Network& net, const RealizationTree& real,
                           const Certificate& cert) {
  Rational total = 0;
  for (const TreeArc& a : real.arcs()) {
    const Rational& len = real.length(a);
    if (len == 0) continue;
    if (pi_set(real, net.terminals(), a).empty()) continue;
    auto it = cert.cuts.find(a);
    if (it == cert.cuts.end()) {
      throw InputError(InputErrorCode::kInvalidCut,
                       "certificate misses arc " + arc_text(a));
    }
    total += len * cut_capacity(net, it->second);
  }
  return total;
}

Rational dual_value(const Network& net, const RealizationTree& real) {
  Rational total = 0;
  for (const TreeArc& a : real.arcs()) {
    const Rational& len = real.length(a);
    if (len == 0) continue;
    const PiSet pi = pi_set(real, net.terminals(), a);
    if (pi.empty()) continue;
    total += len * max_flow(net, pi.tail_side, pi.head_side).value;
  }
  return total;
}

}  // namespace muflow
