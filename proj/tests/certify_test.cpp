#include "muflow/certify.hpp"

#include <gtest/gtest.h>

#include "muflow/solver.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace muflow {
namespace {

const TreeArc kForward{TreeVertexId(0), TreeVertexId(1)};

TEST(FeasibilityTest, DetectsEachViolation) {
  const Instance instance = testing::two_vertex_example();
  const Network& net = instance.net();
  Multiflow ok;
  ok.add_path({VertexId(0), VertexId(1), {ArcId(0)}, 2});
  EXPECT_TRUE(check_feasible(net, ok).ok());

  Multiflow over;
  over.add_path({VertexId(0), VertexId(1), {ArcId(0)}, 3});
  const FeasibilityReport r = check_feasible(net, over);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.violating_arc, ArcId(0));

  Multiflow negative;
  FlowFunction f;
  f.set(ArcId(1), -1);
  negative.add(VertexId(0), VertexId(1), f);
  EXPECT_FALSE(check_feasible(net, negative).ok());

  // Flow on 1 -> 0 is not an s -> t flow for the pair (0, 1).
  Multiflow backwards;
  FlowFunction g;
  g.set(ArcId(1), 1);
  backwards.add(VertexId(0), VertexId(1), g);
  EXPECT_FALSE(check_feasible(net, backwards).ok());
}

TEST(MuValueTest, WeightsComponentsByDistance) {
  const Instance instance = testing::two_vertex_example();
  Multiflow f;
  f.add_path({VertexId(0), VertexId(1), {ArcId(0)}, 2});
  f.add_path({VertexId(1), VertexId(0), {ArcId(1)}, 1});
  EXPECT_EQ(mu_value(instance.net(), instance.real(), f), 6);
  EXPECT_EQ(total_value(instance.net(), f), 3);
}

TEST(DualValueTest, SmallExamples) {
  EXPECT_EQ(dual_value(testing::two_vertex_example().net(),
                       testing::two_vertex_example().real()),
            6);
  EXPECT_EQ(
      dual_value(testing::hub_example().net(), testing::hub_example().real()),
      6);
}

TEST(DualValueTest, MatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance instance = testing::sweep_instance(seed + 1000);
    EXPECT_EQ(dual_value(instance.net(), instance.real()),
              testing::oracle_dual(instance.net(), instance.real()))
        << "seed " << seed;
  }
}

TEST(VerifyTest, AcceptsTheSolverOutput) {
  const Instance instance = testing::two_vertex_example();
  const SolveOutput out = solve(instance.net(), instance.real());
  const CertificateReport report = verify_certificate(
      instance.net(), instance.real(), out.multiflow, out.certificate);
  EXPECT_TRUE(report.ok()) << report.reason;
  EXPECT_EQ(certificate_value(instance.net(), instance.real(), out.certificate),
            6);
}

TEST(VerifyTest, RejectsAMissingCut) {
  const Instance instance = testing::two_vertex_example();
  SolveOutput out = solve(instance.net(), instance.real());
  out.certificate.cuts.erase(kForward);
  EXPECT_EQ(verify_certificate(instance.net(), instance.real(), out.multiflow,
                               out.certificate)
                .status,
            CertificateStatus::kMissingCut);
}

TEST(VerifyTest, RejectsANonSeparatingCut) {
  const Instance instance = testing::two_vertex_example();
  SolveOutput out = solve(instance.net(), instance.real());
  out.certificate.cuts[kForward] = Cut({VertexId(1)});
  const CertificateReport report = verify_certificate(
      instance.net(), instance.real(), out.multiflow, out.certificate);
  EXPECT_EQ(report.status, CertificateStatus::kSeparation);
  EXPECT_EQ(report.tree_arc, kForward);
}

TEST(VerifyTest, RejectsAnUnsaturatedCut) {
  const Instance instance = testing::two_vertex_example();
  const SolveOutput out = solve(instance.net(), instance.real());
  Multiflow half;
  half.add_path({VertexId(0), VertexId(1), {ArcId(0)}, 1});
  EXPECT_EQ(
      verify_certificate(instance.net(), instance.real(), half, out.certificate)
          .status,
      CertificateStatus::kUnsaturated);
}

TEST(VerifyTest, RejectsAnInfeasibleFlow) {
  const Instance instance = testing::two_vertex_example();
  const SolveOutput out = solve(instance.net(), instance.real());
  Multiflow over;
  over.add_path({VertexId(0), VertexId(1), {ArcId(0)}, 5});
  EXPECT_EQ(
      verify_certificate(instance.net(), instance.real(), over, out.certificate)
          .status,
      CertificateStatus::kInfeasible);
}

TEST(VerifyTest, RejectsRepeatedCrossings) {
  // 0 -> 2 -> 1 -> 2 -> 3 style detour: the path leaves X = {0, 1} twice.
  const Instance instance = Instance::with_default_names(
      testing::make_network(4, {{0, 2, 1}, {2, 1, 1}, {1, 3, 1}, {3, 0, 1}},
                            {0, 3}),
      testing::make_tree(2, {{0, 1, 1, 0}}, {0, 3}, {{0}, {1}}));
  Multiflow f;
  f.add_path({VertexId(0), VertexId(3), {ArcId(0), ArcId(1), ArcId(2)}, 1});
  Certificate cert;
  cert.cuts[kForward] = Cut({VertexId(0), VertexId(1)});
  const CertificateReport report =
      verify_certificate(instance.net(), instance.real(), f, cert);
  EXPECT_EQ(report.status, CertificateStatus::kMultipleCrossings);
}

TEST(VerifyTest, StatusNames) {
  EXPECT_EQ(to_string(CertificateStatus::kOk), "ok");
  EXPECT_NE(to_string(CertificateStatus::kSeparation),
            to_string(CertificateStatus::kUnsaturated));
}

}  // namespace
}  // namespace muflow
