#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dckron/reduction.hpp"
#include "example_graphs.hpp"
#include "random_graphs.hpp"

namespace dckron {
namespace {

using testing::edge;
using testing::idx;
using testing::mat;
using testing::vertices;

VertexPartition eliminate(const Network& net, std::initializer_list<const char*> labels) {
  return choose_retained(classify_vertices(net), request::EliminateSet{idx(net, labels)});
}

/// Partition with the given retained index set (no boundary check).
VertexPartition split(std::size_t n, const std::vector<VertexIndex>& retained) {
  VertexPartition p;
  p.retained = retained;
  for (VertexIndex v = 0; v < n; ++v)
    if (!std::binary_search(retained.begin(), retained.end(), v)) p.eliminated.push_back(v);
  return p;
}

std::vector<double> sorted_weights(const Network& net) {
  std::vector<double> w;
  for (const auto& e : net.edges()) w.push_back(e.susceptance);
  std::sort(w.begin(), w.end());
  return w;
}

void expect_weights_near(const Network& net, std::vector<double> expected) {
  std::sort(expected.begin(), expected.end());
  const auto got = sorted_weights(net);
  ASSERT_EQ(got.size(), expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-9);
}

TEST(SchurComplement, StronglyConnectedExample) {
  const auto l = weighted_laplacian(testing::strongly_connected_five());
  const auto red = schur_complement(l, {0, 1, 2});
  const Eigen::MatrixXd expected = mat({{2, -1.0 / 3, -5.0 / 3}, {0, 1.0 / 3, -1.0 / 3}, {-1, -2.0 / 3, 5.0 / 3}});
  EXPECT_LT((red.data() - expected).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_EQ(red.row_labels(), (Labels{"1", "2", "3"}));
}

TEST(SchurComplement, QuasiExamplesReduceToSameMatrix) {
  const Eigen::MatrixXd expected = mat({{2, -2}, {0, 0}});
  EXPECT_EQ(schur_complement(weighted_laplacian(testing::quasi_acyclic()), {0, 1}).data(), expected);
  EXPECT_EQ(schur_complement(weighted_laplacian(testing::quasi_cyclic()), {0, 1}).data(), expected);
}

TEST(SchurComplement, SingularEliminatedBlock) {
  // Keeping {1,3,4,5,6} of the acyclic example eliminates the sink.
  EXPECT_THROW(schur_complement(weighted_laplacian(testing::quasi_acyclic()), {0, 2, 3, 4, 5}), SingularBlock);
}

TEST(KronReduce, Ieee5) {
  const auto net = builtin_case("ieee5");
  const auto r = kron_reduce(net, eliminate(net, {"3", "4"}));
  EXPECT_EQ(r.reduced.data(), mat({{2, -1, -1}, {0, 3, -3}, {0, 0, 0}}));
  EXPECT_EQ(r.retained, (Labels{"1", "2", "5"}));
  EXPECT_EQ(r.eliminated, (Labels{"3", "4"}));
  EXPECT_TRUE(r.reachable);
}

TEST(KronReduce, Ieee9) {
  const auto net = builtin_case("ieee9");
  const auto r = kron_reduce(net, eliminate(net, {"4", "7"}));
  const Eigen::MatrixXd expected = mat({{1, 0, 0, -0.5, -0.5, 0, 0},
                                        {0, 1, 0, -0.5, 0, -0.5, 0},
                                        {0, 0, 1, 0, 0, 0, -1},
                                        {0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, -1, -1, 2}});
  EXPECT_EQ(r.reduced.data(), expected);
  EXPECT_EQ(r.retained, (Labels{"1", "2", "3", "5", "6", "8", "9"}));
  EXPECT_EQ(r.accompanying.rows(), 7);
  EXPECT_EQ(r.accompanying.cols(), 2);
}

TEST(KronReduce, FourCycle) {
  const auto net = testing::four_cycle();
  const auto r = kron_reduce(net, eliminate(net, {"4"}));
  EXPECT_EQ(r.reduced.data(), mat({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}));
  EXPECT_TRUE(connectivity_class(r.reduced_net).strongly());
  EXPECT_TRUE(preserved_class_check(net, r.reduced_net).ok());
}

TEST(KronReduce, QuasiExamplesStayQuasi) {
  const auto acy = testing::quasi_acyclic();
  const auto r1 = kron_reduce(acy, eliminate(acy, {"5", "6"}));
  EXPECT_LT((r1.reduced.data() - mat({{2, -0.5, -1.5, 0}, {0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}}))
                .cwiseAbs()
                .maxCoeff(),
            1e-9);
  expect_weights_near(r1.reduced_net, {1.5, 1, 1, 0.5});
  EXPECT_EQ(connectivity_class(r1.reduced_net).kind, ConnectivityClass::Kind::QuasiStronglyConnected);

  const auto cyc = testing::quasi_cyclic();
  const auto r2 = kron_reduce(cyc, eliminate(cyc, {"5"}));
  EXPECT_LT((r2.reduced.data() - mat({{2, 0, -2, 0}, {0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, -1, 2}}))
                .cwiseAbs()
                .maxCoeff(),
            1e-9);
  expect_weights_near(r2.reduced_net, {2, 1, 1, 1});
  EXPECT_EQ(connectivity_class(r2.reduced_net).kind, ConnectivityClass::Kind::QuasiStronglyConnected);
  EXPECT_TRUE(preserved_class_check(cyc, r2.reduced_net).ok());
}

TEST(KronReduce, AccompanyingMatrixUsesSameBlocks) {
  const auto net = builtin_case("ieee14");
  const auto part = choose_retained(classify_vertices(net), request::BoundaryPlusNeighbors{&net});
  const auto r = kron_reduce(net, part);
  const Eigen::MatrixXd l = weighted_laplacian(net).data();
  std::vector<Eigen::Index> a(part.retained.begin(), part.retained.end());
  std::vector<Eigen::Index> e(part.eliminated.begin(), part.eliminated.end());
  const Eigen::MatrixXd ref_ac = -l(a, e) * l(e, e).inverse();
  const Eigen::MatrixXd ref_red = l(a, a) + ref_ac * l(e, a);
  EXPECT_LT((r.accompanying.data() - ref_ac).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((r.reduced.data() - ref_red).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(KronReduce, PrecheckAndSingularBlock) {
  const auto acy = testing::quasi_acyclic();
  const auto part = split(6, idx(acy, {"1", "3", "4", "5", "6"}));
  EXPECT_THROW(kron_reduce(acy, part), NotReducible);
  EXPECT_THROW(kron_reduce(acy, part, {.precheck = false}), SingularBlock);
}

TEST(KronReduce, ReducedNetworkKeepsRoles) {
  const auto net = builtin_case("ieee9");
  const auto r = kron_reduce(net, eliminate(net, {"4", "7"}));
  EXPECT_EQ(r.reduced_net.role(0).kind, RoleKind::Source);
  EXPECT_TRUE(r.reduced_net.role(0).attachment.generator);
  EXPECT_EQ(r.reduced_net.vertex_count(), 7u);
  EXPECT_TRUE(validate_network(r.reduced_net).ok());
}

TEST(IterativeKron, MatchesBlockOnIeee9InEitherOrder) {
  const auto net = builtin_case("ieee9");
  const auto block = kron_reduce(net, eliminate(net, {"4", "7"})).reduced;
  EXPECT_EQ(iterative_kron(net, {"4", "7"}), block);
  EXPECT_LT((iterative_kron(net, {"7", "4"}).data() - block.data()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(iterative_kron(net, {}), weighted_laplacian(net));
}

TEST(IterativeKron, ReportsZeroPivotStep) {
  const auto acy = testing::quasi_acyclic();
  try {
    iterative_kron(acy, {"5", "2"});
    FAIL();
  } catch (const ZeroPivot& e) {
    EXPECT_EQ(e.step(), 2u);
    EXPECT_EQ(e.vertex(), "2");
  }
  EXPECT_THROW(iterative_kron(acy, {"9"}), ValidationError);
}

TEST(RestoreGraph, EightVertexExample) {
  const auto net = restore_graph(testing::labeled(testing::eight_vertex_laplacian()));
  EXPECT_EQ(net.edge_count(), 10u);
  EXPECT_EQ(sorted_weights(net), (std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(weighted_laplacian(net).data(), testing::eight_vertex_laplacian());
  const auto ref = testing::eight_vertex_example();
  for (const auto& e : ref.edges()) EXPECT_EQ(net.weight(e.head, e.tail), e.susceptance);
  // Row-major edge order.
  EXPECT_EQ(net.edge_labels().front(), "1->5");
  EXPECT_EQ(net.edge_labels().back(), "8->7");
}

TEST(RestoreGraph, ZeroMatrixAndNoiseThreshold) {
  EXPECT_EQ(restore_graph(testing::labeled(Eigen::MatrixXd::Zero(3, 3))).edge_count(), 0u);
  const auto noisy = mat({{1e-11, -1e-11, 0}, {0, 2, -2}, {0, 0, 0}});
  EXPECT_EQ(restore_graph(testing::labeled(noisy)).edge_count(), 1u);
}

TEST(RestoreGraph, RejectsNonLaplacians) {
  auto property = [](const Eigen::MatrixXd& m) -> std::string {
    try {
      restore_graph(testing::labeled(m));
    } catch (const NotALaplacian& e) {
      return e.property();
    }
    return "";
  };
  EXPECT_EQ(property(mat({{1, 1}, {0, 0}})), "sign pattern");
  EXPECT_EQ(property(mat({{2, -1}, {0, 0}})), "row sums");
  EXPECT_THROW(restore_graph(LabeledMatrixd({"a", "b"}, {"b", "a"}, Eigen::MatrixXd::Zero(2, 2))), NotALaplacian);
}

TEST(Preservation, NeitherClassAssertsNothing) {
  const Network net("n", vertices(4), {edge(1, 2), edge(3, 4)});
  const auto rep = preserved_class_check(net, Network("m", vertices(2), {}));
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.before.kind, ConnectivityClass::Kind::Neither);
}

struct RandomReduction {
  Network net;
  std::vector<VertexIndex> retained;
};

/// Random graph with a random reachable retained set.
std::optional<RandomReduction> random_reduction(std::mt19937& rng, std::size_t n) {
  const auto net = testing::random_network(rng, n, 0.35, false);
  std::bernoulli_distribution keep(0.5);
  std::vector<VertexIndex> alpha;
  for (VertexIndex v = 0; v < n; ++v)
    if (keep(rng)) alpha.push_back(v);
  if (alpha.size() < 2 || alpha.size() == n || !is_reachable_subset(net, alpha)) return std::nullopt;
  return RandomReduction{net, alpha};
}

TEST(Properties, BlockEqualsIterativeInAnyOrder) {
  std::mt19937 rng(123);
  int checked = 0;
  while (checked < 400) {
    const auto c = random_reduction(rng, 3 + static_cast<std::size_t>(checked % 6));
    if (!c) continue;
    const auto part = split(c->net.vertex_count(), c->retained);
    const auto block = kron_reduce(c->net, part).reduced;
    Labels order;
    for (auto v : part.eliminated) order.push_back(c->net.label(v));
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      std::shuffle(order.begin(), order.end(), rng);
      const auto it = iterative_kron(c->net, order);
      ASSERT_EQ(it.row_labels(), block.row_labels());
      EXPECT_LT((it.data() - block.data()).cwiseAbs().maxCoeff(), 1e-10);
    }
    ++checked;
  }
}

TEST(Properties, ClosureAndPathPreservation) {
  std::mt19937 rng(321);
  int checked = 0;
  while (checked < 400) {
    const auto c = random_reduction(rng, 3 + static_cast<std::size_t>(checked % 6));
    if (!c) continue;
    const auto r = kron_reduce(c->net, split(c->net.vertex_count(), c->retained));
    const auto report = laplacian_report(r.reduced);
    EXPECT_TRUE(report.is_laplacian());
    for (std::size_t i = 0; i < c->retained.size(); ++i) {
      const auto before = reachable_from(c->net, c->retained[i]);
      const auto after = reachable_from(r.reduced_net, i);
      for (std::size_t j = 0; j < c->retained.size(); ++j)
        if (before[c->retained[j]]) EXPECT_TRUE(after[j]) << serialize_network(c->net);
    }
    ++checked;
  }
}

TEST(Properties, StrongAndRootedQuasiClassesArePreserved) {
  std::mt19937 rng(555);
  int strong = 0, quasi = 0;
  for (int trial = 0; trial < 4000 && (strong < 100 || quasi < 100); ++trial) {
    const auto c = random_reduction(rng, 3 + static_cast<std::size_t>(trial % 6));
    if (!c) continue;
    const auto cls = connectivity_class(c->net);
    if (!cls.quasi()) continue;
    // Quasi-strong connectivity carries over when a root is retained.
    bool root_kept = false;
    for (auto v : c->retained) {
      const auto reach = reachable_from(c->net, v);
      root_kept = root_kept || std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
    }
    if (!root_kept) continue;
    const auto r = kron_reduce(c->net, split(c->net.vertex_count(), c->retained));
    const auto rep = preserved_class_check(c->net, r.reduced_net);
    EXPECT_TRUE(rep.ok()) << serialize_network(c->net);
    (cls.strongly() ? strong : quasi)++;
  }
  EXPECT_GE(strong, 50);
  EXPECT_GE(quasi, 50);
}

TEST(Properties, ExistenceDichotomyExhaustiveN4) {
  std::mt19937 rng(4);
  const std::size_t n = 4;
  for (unsigned long mask = 0; mask < (1ul << 12); ++mask) {
    const auto net = testing::network_from_mask(rng, n, mask);
    for (unsigned keep = 0; keep < 16; ++keep) {
      std::vector<VertexIndex> alpha;
      for (VertexIndex v = 0; v < n; ++v)
        if (keep & (1u << v)) alpha.push_back(v);
      if (alpha.size() < 2 || alpha.size() == n) continue;
      const auto part = split(n, alpha);
      const bool reachable = is_reachable_subset(net, alpha);
      bool not_reducible = false, singular = false;
      try {
        kron_reduce(net, part);
      } catch (const NotReducible&) {
        not_reducible = true;
      }
      try {
        kron_reduce(net, part, {.precheck = false});
      } catch (const SingularBlock&) {
        singular = true;
      }
      ASSERT_EQ(not_reducible, !reachable);
      ASSERT_EQ(singular, !reachable);
    }
  }
}

// Feeder-like graphs where every interior vertex lies on a source-to-sink
// path: keeping the whole boundary always admits a reduction.
TEST(Properties, FeederNetworksAlwaysReduce) {
  std::mt19937 rng(9);
  std::bernoulli_distribution coin(0.45);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 4 + trial % 6;
    std::vector<EdgeSpec> es;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (j == i + 1 || coin(rng)) es.push_back(edge(i, j));
    const Network net("feeder", vertices(static_cast<std::size_t>(n)), es);
    const auto part = choose_retained(classify_vertices(net), request::AllInterior{});
    EXPECT_NO_THROW(kron_reduce(net, part));
    ++checked;
  }
  EXPECT_EQ(checked, 600);
}

TEST(Properties, PipelineClosureOnBuiltins) {
  for (const auto& name : builtin_case_names()) {
    const auto net = builtin_case(name);
    const auto r = kron_reduce(net, choose_retained(classify_vertices(net), request::AllInterior{}));
    const auto restored = restore_graph(r.reduced);
    EXPECT_LT((weighted_laplacian(restored).data() - r.reduced.data()).cwiseAbs().maxCoeff(), 1e-9) << name;
    EXPECT_LT((weighted_laplacian(r.reduced_net).data() - r.reduced.data()).cwiseAbs().maxCoeff(), 1e-9) << name;
  }
}

}  // namespace
}  // namespace dckron
