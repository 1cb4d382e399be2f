#include "muflow/generator.hpp"

#include <gtest/gtest.h>

#include "muflow/validate.hpp"
#include "support/fixtures.hpp"

namespace muflow {
namespace {

TEST(GeneratorTest, IsDeterministic) {
  const Instance a = generate_instance(5, 40, 20, 5, 4);
  const Instance b = generate_instance(5, 40, 20, 5, 4);
  const Instance c = generate_instance(6, 40, 20, 5, 4);
  EXPECT_EQ(serialize_instance(a), serialize_instance(b));
  EXPECT_NE(serialize_instance(a), serialize_instance(c));
}

TEST(GeneratorTest, ProducesValidInstances) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance instance = testing::sweep_instance(seed);
    EXPECT_TRUE(validate_instance(instance.net(), instance.real()).ok())
        << "seed " << seed;
    EXPECT_LE(instance.net().graph().num_vertices(), 200u);
    const std::size_t leaves = instance.real().leaf_count();
    EXPECT_GE(leaves, 2u);
    EXPECT_LE(leaves, 8u);
  }
}

TEST(GeneratorTest, HonoursLeafAndTerminalCounts) {
  GeneratorOptions o;
  o.seed = 3;
  o.n = 60;
  o.leaves = 6;
  o.terminals = 9;
  const Instance instance = generate_instance(o);
  EXPECT_EQ(instance.real().leaf_count(), 6u);
  EXPECT_EQ(instance.net().terminals().size(), 9u);
  EXPECT_EQ(instance.net().graph().num_vertices(), 60u);
  EXPECT_FALSE(testing::has_bare_leaf(instance));
}

TEST(GeneratorTest, AllSimpleTerminals) {
  GeneratorOptions o;
  o.seed = 11;
  o.simple_fraction = 1.0;
  const Instance instance = generate_instance(o);
  for (VertexId s : instance.net().terminals()) {
    EXPECT_EQ(classify_terminal(instance.real(), s), TerminalKind::kSimple);
  }
}

TEST(GeneratorTest, ForcedLinearTerminals) {
  GeneratorOptions o;
  o.seed = 4;
  o.leaves = 5;
  o.terminals = 7;
  o.linear_terminals = 2;
  const Instance instance = generate_instance(o);
  int linear = 0;
  for (VertexId s : instance.net().terminals()) {
    linear += classify_terminal(instance.real(), s) == TerminalKind::kLinear;
  }
  EXPECT_GE(linear, 2);
}

TEST(GeneratorTest, RejectsUnusableParameters) {
  for (auto edit : std::vector<void (*)(GeneratorOptions&)>{
           [](GeneratorOptions& o) { o.n = 0; },
           [](GeneratorOptions& o) { o.leaves = 1; },
           [](GeneratorOptions& o) { o.cycles = -1; },
           [](GeneratorOptions& o) {
             o.n = 3;
             o.terminals = 5;
           },
       }) {
    GeneratorOptions o;
    edit(o);
    try {
      generate_instance(o);
      ADD_FAILURE() << "accepted";
    } catch (const InputError& e) {
      EXPECT_EQ(e.code(), InputErrorCode::kInvalidArgument);
    }
  }
}

TEST(ValidateTest, ReportsTheUnbalancedVertex) {
  const Instance instance = Instance::with_default_names(
      testing::make_network(3, {{0, 2, 2}, {2, 1, 1}, {1, 0, 1}}, {0, 1}),
      testing::make_tree(2, {{0, 1, 1, 1}}, {0, 1}, {{0}, {1}}));
  const ValidationReport report =
      validate_instance(instance.net(), instance.real());
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.violating_vertex, VertexId(2));
}

TEST(ValidateTest, ComplexTerminalsMustBeBalanced) {
  // Terminal 0 spans the whole tree in both directions.
  const Instance instance = Instance::with_default_names(
      testing::make_network(2, {{0, 1, 2}, {1, 0, 1}}, {0, 1}),
      testing::make_tree(2, {{0, 1, 1, 1}}, {0, 1}, {{0, 1}, {1}}));
  const ValidationReport report =
      validate_instance(instance.net(), instance.real());
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.violating_vertex, VertexId(0));
}

}  // namespace
}  // namespace muflow
