#pragma once

#include <optional>
#include <string>

#include "muflow/graph.hpp"
#include "muflow/rational.hpp"
#include "muflow/realization.hpp"
#include "muflow/solution.hpp"

namespace muflow {

// Sum over components of mu(s, t) times the component value.
Rational mu_value(const Network& net, const RealizationTree& real,
                  const Multiflow& f);

struct FeasibilityReport {
  std::optional<ArcId> violating_arc;
  std::optional<TerminalPair> violating_component;
  std::string reason;

  bool ok() const { return reason.empty(); }
};

// Nonnegativity, arc-wise capacity bound and per-component conservation.
FeasibilityReport check_feasible(const Network& net, const Multiflow& f);

enum class CertificateStatus {
  kOk,
  kInfeasible,
  kMissingCut,
  kInvalidCut,
  kSeparation,
  kMultipleCrossings,
  kUnsaturated,
  kValueMismatch,
};

std::string to_string(CertificateStatus status);

struct CertificateReport {
  CertificateStatus status = CertificateStatus::kOk;
  std::optional<TreeArc> tree_arc;
  std::string reason;

  bool ok() const { return status == CertificateStatus::kOk; }
};

// Checks, for every tree arc a of positive length with a nonempty pair set,
// that X_a separates A_a from B_a, that no path of f crosses the cut boundary
// twice, and that the Pi_a paths fill every arc of delta_out(X_a). Finally
// checks that mu_value(f) equals sum_a l(a) c(delta_out(X_a)).
CertificateReport verify_certificate(const Network& net,
                                     const RealizationTree& real,
                                     const Multiflow& f,
                                     const Certificate& cert);

// sum_a l(a) * (min (A_a, B_a)-cut capacity) over arcs with Pi_a nonempty.
// An upper bound on every mu_value, attained by the optimum.
Rational dual_value(const Network& net, const RealizationTree& real);

// sum_a l(a) * c(delta_out(X_a)) for the cuts of a certificate.
Rational certificate_value(const Network& net, const RealizationTree& real,
                           const Certificate& cert);

}  // namespace muflow
