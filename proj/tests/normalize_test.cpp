#include "muflow/normalize.hpp"

#include <gtest/gtest.h>

#include "muflow/certify.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace muflow {
namespace {

using testing::make_network;
using testing::make_tree;

std::size_t max_degree(const RealizationTree& real) {
  std::size_t d = 0;
  for (TreeVertexId v : real.vertices()) d = std::max(d, real.degree(v));
  return d;
}

TEST(NormalizeTest, MergesDegreeTwoVertices) {
  // Path 0 - 1 - 2 with terminals on the ends.
  const Network net = make_network(2, {{0, 1, 1}, {1, 0, 1}}, {0, 1});
  const RealizationTree real =
      make_tree(3, {{0, 1, 1, 2}, {2, 1, 3, 4}}, {0, 1}, {{0}, {2}});
  const ReducedInstance r = normalize(net, real);
  ASSERT_EQ(r.real.edges().size(), 1u);
  EXPECT_EQ(mu(r.real, VertexId(0), VertexId(1)), 5);
  EXPECT_EQ(mu(r.real, VertexId(1), VertexId(0)), 5);
  const auto first =
      arc_image(r.undo, real, r.real, {TreeVertexId(0), TreeVertexId(1)});
  const auto second =
      arc_image(r.undo, real, r.real, {TreeVertexId(1), TreeVertexId(2)});
  ASSERT_TRUE(first && second);
  EXPECT_EQ(*first, *second);
  EXPECT_EQ(r.real.length(*first), 5);
}

TEST(NormalizeTest, SplitsHighDegreeVertices) {
  std::vector<testing::EdgeRow> edges;
  std::vector<int> terminals;
  std::vector<std::vector<int>> subtrees;
  std::vector<testing::ArcRow> arcs;
  for (int i = 1; i <= 6; ++i) {
    edges.push_back({0, i, 1, 1});
    terminals.push_back(i - 1);
    subtrees.push_back({i});
    arcs.push_back({i - 1, (i % 6), 1});
  }
  const Network net = make_network(6, arcs, terminals);
  const RealizationTree real = make_tree(7, edges, terminals, subtrees);
  const ReducedInstance r = normalize(net, real);
  EXPECT_EQ(max_degree(r.real), 3u);
  EXPECT_EQ(r.real.leaf_count(), 6u);
  for (VertexId s : net.terminals()) {
    for (VertexId t : net.terminals()) {
      EXPECT_EQ(mu(r.real, s, t), mu(real, s, t));
    }
  }
}

TEST(NormalizeTest, PrunesBareLeaves) {
  const Network net = make_network(2, {{0, 1, 1}, {1, 0, 1}}, {0, 1});
  const RealizationTree real = make_tree(
      4, {{0, 1, 1, 1}, {1, 2, 1, 1}, {1, 3, 1, 1}}, {0, 1}, {{0}, {2}});
  const ReducedInstance r = normalize(net, real);
  EXPECT_EQ(r.real.edges().size(), 1u);
  EXPECT_FALSE(
      arc_image(r.undo, real, r.real, {TreeVertexId(1), TreeVertexId(3)}));
}

TEST(NormalizeTest, SplitsLinearTerminals) {
  // Terminal 0 spans the edge 0 - 1, which is free from 1 to 0.
  const Network net =
      make_network(3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 0, 1}}, {0, 1, 2});
  const RealizationTree real =
      make_tree(4, {{0, 1, 3, 0}, {1, 2, 1, 1}, {0, 3, 1, 1}}, {0, 1, 2},
                {{0, 1}, {2}, {3}});
  ASSERT_EQ(classify_terminal(real, VertexId(0)), TerminalKind::kLinear);
  const ReducedInstance r = normalize(net, real);
  ASSERT_EQ(r.undo.splits.size(), 1u);
  const LinearSplit& split = r.undo.splits[0];
  EXPECT_EQ(split.terminal, VertexId(0));
  EXPECT_FALSE(r.net.is_terminal(VertexId(0)));
  EXPECT_TRUE(r.net.is_terminal(split.inflow_terminal));
  EXPECT_TRUE(r.net.is_terminal(split.outflow_terminal));
  EXPECT_EQ(r.net.capacity(split.inflow_arc), 3);
  EXPECT_EQ(r.net.capacity(split.outflow_arc), 3);
  EXPECT_EQ(classify_terminal(r.real, split.inflow_terminal),
            TerminalKind::kSimple);
  EXPECT_EQ(dual_value(r.net, r.real), dual_value(net, real));
}

TEST(NormalizeTest, SplitLinearTerminalRejectsOthers) {
  const Instance instance = testing::hub_example();
  IdPool ids = IdPool::after(instance.net(), instance.real());
  EXPECT_THROW(
      split_linear_terminal(instance.net(), instance.real(), VertexId(1), ids),
      ContractViolation);
}

TEST(NormalizeTest, PullBackRenamesSplitTerminals) {
  NormalizationUndo undo;
  undo.splits.push_back(
      {VertexId(0), VertexId(10), VertexId(11), ArcId(20), ArcId(21)});
  Multiflow reduced;
  reduced.add_path(
      {VertexId(11), VertexId(10), {ArcId(21), ArcId(5), ArcId(20)}, 2});
  const Multiflow back = pull_back_multiflow(undo, reduced);
  ASSERT_EQ(back.components().size(), 0u);

  Multiflow other;
  other.add_path({VertexId(11), VertexId(3), {ArcId(21), ArcId(5)}, 1});
  const Multiflow renamed = pull_back_multiflow(undo, other);
  const FlowFunction* f = renamed.find(VertexId(0), VertexId(3));
  ASSERT_NE(f, nullptr);
  EXPECT_EQ((*f)[ArcId(5)], 1);
  EXPECT_EQ((*f)[ArcId(21)], 0);
}

// Structural and value invariants on random instances with every feature the
// reductions handle.
TEST(NormalizeTest, RandomInstancesReachTheNormalForm) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance instance = testing::reduction_instance(seed);
    const ReducedInstance r = normalize(instance.net(), instance.real());
    EXPECT_LE(max_degree(r.real), 3u) << "seed " << seed;
    for (VertexId s : r.net.terminals()) {
      EXPECT_NE(classify_terminal(r.real, s), TerminalKind::kLinear);
    }
    for (TreeVertexId v : r.real.vertices()) {
      if (!r.real.is_leaf(v)) continue;
      bool hosts = false;
      for (VertexId s : r.net.terminals()) {
        const auto sub = r.real.subtree(s);
        hosts = hosts || (sub.size() == 1 && sub[0] == v);
      }
      EXPECT_TRUE(hosts) << "seed " << seed;
    }
    EXPECT_EQ(testing::oracle_dual(r.net, r.real),
              testing::oracle_dual(instance.net(), instance.real()))
        << "seed " << seed;
    const ReducedInstance again = normalize(r.net, r.real);
    EXPECT_TRUE(again.undo.splits.empty());
    EXPECT_EQ(again.real.edges().size(), r.real.edges().size());
  }
}

}  // namespace
}  // namespace muflow
