#include <gtest/gtest.h>

#include <random>

#include "dckron/network.hpp"
#include "example_graphs.hpp"
#include "random_graphs.hpp"

namespace dckron {
namespace {

using testing::edge;
using testing::vertices;

constexpr const char* kThreeBus = R"(# three bus feeder
net tiny
vertex 1 source gen
vertex 2 interior
vertex 3 sink load
edge 1 2 x=-0.5
edge 2 3 b=4
edge 1 3 b=1.5
)";

TEST(Network, RejectsInvalidEdges) {
  EXPECT_THROW(Network("n", vertices(2), {edge(1, 1)}), ValidationError);
  EXPECT_THROW(Network("n", vertices(2), {edge(1, 2, 0.0)}), ValidationError);
  EXPECT_THROW(Network("n", vertices(2), {edge(1, 2, -1.0)}), ValidationError);
  EXPECT_THROW(Network("n", vertices(2), {edge(1, 2), edge(1, 2, 2.0)}), ValidationError);
  EXPECT_THROW(Network("n", vertices(2), {edge(1, 3)}), ValidationError);
  EXPECT_THROW(Network("n", {{"a", {}}, {"a", {}}}, {}), ValidationError);
}

TEST(Network, AcceptsAntiparallelPairs) {
  const Network net("n", vertices(2), {edge(1, 2, 2.0), edge(2, 1, 3.0)});
  EXPECT_EQ(net.weight(0, 1), 2.0);
  EXPECT_EQ(net.weight(1, 0), 3.0);
  EXPECT_EQ(net.out_degree(0), 1u);
  EXPECT_EQ(net.in_degree(0), 1u);
}

TEST(Network, LabelLookupAndEdgeLabels) {
  const auto net = testing::four_vertex_example();
  EXPECT_EQ(net.index_of("3"), 2u);
  EXPECT_FALSE(net.find("9").has_value());
  EXPECT_THROW(net.index_of("9"), ValidationError);
  EXPECT_EQ(net.edge_labels().front(), "1->3");
  EXPECT_EQ(net.successors(0).size(), 2u);
}

TEST(Network, LabelOrderingIsNumericForIntegers) {
  EXPECT_TRUE(label_less("2", "10"));
  EXPECT_FALSE(label_less("10", "2"));
  EXPECT_TRUE(label_less("a", "b"));
}

TEST(DgnetFormat, ParsesReactanceAsSusceptance) {
  const auto parsed = parse_network(kThreeBus);
  const auto& net = parsed.network;
  EXPECT_TRUE(parsed.warnings.empty());
  EXPECT_EQ(net.name(), "tiny");
  ASSERT_EQ(net.edge_count(), 3u);
  EXPECT_DOUBLE_EQ(net.edges()[0].susceptance, 2.0);
  EXPECT_EQ(net.edges()[1].susceptance, 4.0);
  EXPECT_EQ(net.role(0).kind, RoleKind::Source);
  EXPECT_TRUE(net.role(0).attachment.generator);
  EXPECT_TRUE(net.role(2).attachment.loading);
}

TEST(DgnetFormat, DropsNonNegativeReactanceWithWarning) {
  const auto parsed = parse_network("vertex a source\nvertex b sink\nvertex c sink\nedge a b x=0.2\nedge a c x=-1\n");
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_EQ(parsed.warnings[0].line, 4);
  EXPECT_EQ(parsed.network.edge_count(), 1u);
}

int error_line(const std::string& text) {
  try {
    parse_network(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(DgnetFormat, ReportsErrorLines) {
  EXPECT_EQ(error_line("vertex a source\nvertex a sink\n"), 2);
  EXPECT_EQ(error_line("vertex a source\nvertex b sink\nedge a b b=-1\n"), 3);
  EXPECT_EQ(error_line("vertex a source\nvertex b sink\nedge a b b=1\nedge a b b=2\n"), 4);
  EXPECT_EQ(error_line("vertex a source\nedge a zz b=1\n"), 2);
  EXPECT_EQ(error_line("vertex a boss\n"), 1);
  EXPECT_EQ(error_line("\n\nbogus line\n"), 3);
  EXPECT_EQ(error_line("vertex a interior\nedge a a b=1\n"), 2);
  EXPECT_EQ(error_line("vertex a interior\nvertex b interior\nedge a b w=1\n"), 3);
  EXPECT_EQ(error_line("vertex a interior\nvertex b interior\nedge a b b=abc\n"), 3);
}

TEST(DgnetFormat, RoundTripBuiltins) {
  for (const auto& name : builtin_case_names()) {
    const auto net = builtin_case(name);
    const auto back = parse_network(serialize_network(net)).network;
    EXPECT_TRUE(equivalent(net, back)) << name;
    EXPECT_TRUE(net == back) << name;
  }
}

TEST(DgnetFormat, RoundTripRandomNetworks) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = testing::random_network(rng, 2 + trial % 9, 0.35, trial % 2 == 0);
    const auto back = parse_network(serialize_network(net)).network;
    ASSERT_TRUE(equivalent(net, back)) << serialize_network(net);
  }
}

TEST(Network, EquivalenceIgnoresEdgeOrder) {
  const Network a("n", vertices(3), {edge(1, 2), edge(2, 3)});
  const Network b("n", vertices(3), {edge(2, 3), edge(1, 2)});
  EXPECT_FALSE(a == b);
  EXPECT_TRUE(equivalent(a, b));
}

TEST(Validation, RoleConsistency) {
  const Network bad("n", vertices(3, {2}, {1}), {edge(1, 2), edge(2, 3)});
  const auto report = validate_network(bad);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.has("source-with-in-edge"));
  EXPECT_TRUE(report.has("sink-with-out-edge"));
}

TEST(Validation, MinimumSizeAndIsolatedVertices) {
  EXPECT_TRUE(validate_network(Network("n", vertices(1), {})).has("min-size"));
  const auto report = validate_network(Network("n", vertices(3), {edge(1, 2)}));
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.has("isolated-vertex"));
}

TEST(Validation, BuiltinsAreValidAndRoleConsistent) {
  for (const auto& name : builtin_case_names()) {
    const auto net = builtin_case(name);
    EXPECT_TRUE(validate_network(net).empty()) << name;
    for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
      if (net.role(v).kind == RoleKind::Sink) EXPECT_EQ(net.out_degree(v), 0u) << name << " " << net.label(v);
      if (net.role(v).kind == RoleKind::Source) EXPECT_EQ(net.in_degree(v), 0u) << name << " " << net.label(v);
    }
  }
  EXPECT_THROW(builtin_case("ieee118"), ValidationError);
}

TEST(Builtins, SizesMatchTestFeeders) {
  EXPECT_EQ(builtin_case("ieee3").vertex_count(), 3u);
  EXPECT_EQ(builtin_case("ieee5").vertex_count(), 5u);
  EXPECT_EQ(builtin_case("ieee9").edge_count(), 9u);
  EXPECT_EQ(builtin_case("ieee14").edge_count(), 20u);
  EXPECT_EQ(builtin_case("rts96-area4").vertex_count(), 27u);
}

}  // namespace
}  // namespace dckron
