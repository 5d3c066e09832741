#include <gtest/gtest.h>

#include "enumcc/errors.hpp"
#include "enumcc/oracle.hpp"
#include "enumcc/partition.hpp"
#include "support.hpp"

using namespace enumcc;
using enumcc::testing::frustrated_triangle;

namespace {
Membership m(std::vector<int> labels) { return Membership::from_labels(labels); }
}  // namespace

TEST(Canonicalize, Examples) {
  EXPECT_EQ(m({2, 1, 1, 2, 1}).labels(), (std::vector<int>{0, 1, 1, 0, 1}));
  EXPECT_EQ(m({0, 0, 1}).labels(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(m({5, 5, 5}).labels(), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(m({5, 5, 5}).num_modules(), 1);
}

TEST(Canonicalize, IdempotentAndPartitionPreserving) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto labels = enumcc::testing::random_labels(rng, 9, 5);
    auto p = canonicalize(labels);
    EXPECT_EQ(canonicalize(p.labels()), p);
    EXPECT_TRUE(enumcc::testing::same_partition(labels, p.labels()));
  }
}

TEST(Membership, FromCanonicalValidates) {
  EXPECT_NO_THROW(Membership::from_canonical({0, 1, 0, 2}));
  EXPECT_THROW(Membership::from_canonical({1, 0}), InputError);
  EXPECT_THROW(Membership::from_canonical({0, 2}), InputError);
  EXPECT_THROW(Membership::from_labels(std::vector<int>{0, -1}), InputError);
}

TEST(Membership, ModulesAndSizes) {
  auto p = m({0, 1, 0, 2, 1});
  EXPECT_EQ(p.modules(), (std::vector<VertexSet>{{0, 2}, {1, 4}, {3}}));
  EXPECT_EQ(p.module_sizes(), (std::vector<int>{2, 2, 1}));
}

TEST(Membership, TextRoundTrip) {
  auto p = m({0, 1, 1, 0, 2});
  EXPECT_EQ(to_string(p), "0,1,1,0,2");
  EXPECT_EQ(parse_membership("0,1,1,0,2"), p);
  EXPECT_EQ(parse_membership("3, 3,1"), m({0, 0, 1}));
  EXPECT_THROW(parse_membership("0;1"), InputError);
  EXPECT_THROW(parse_membership("0,x"), InputError);
}

TEST(Imbalance, FrustratedTriangle) {
  auto g = frustrated_triangle();
  EXPECT_EQ(imbalance(g, m({0, 0, 0})), 1);
  EXPECT_EQ(imbalance(g, m({0, 1, 2})), 2);
  EXPECT_EQ(imbalance(g, m({0, 0, 1})), 1);
}

TEST(Imbalance, BalancedGraphHasZero) {
  SignedGraph g(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, -1}, {1, 3, -1}});
  EXPECT_EQ(imbalance(g, m({0, 0, 1, 1})), 0);
}

TEST(Imbalance, LengthMismatchThrows) {
  EXPECT_THROW(imbalance(frustrated_triangle(), m({0, 0})), InputError);
}

TEST(Imbalance, MatchesNaiveCountAndIgnoresLabelNames) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    auto g = enumcc::testing::random_graph(rng, 10, 0.5, 0.5);
    auto labels = enumcc::testing::random_labels(rng, 10, 4);
    int naive = enumcc::testing::naive_imbalance(g, labels);
    EXPECT_EQ(imbalance(g, labels), naive);
    EXPECT_EQ(imbalance(g, canonicalize(labels)), naive);
  }
}

TEST(FrustrationReport, Examples) {
  auto g = frustrated_triangle();
  auto all = frustration_report(g, m({0, 0, 0}));
  EXPECT_EQ(all.imbalance, 1);
  EXPECT_EQ(all.frustrated_edges, (std::vector<SignedEdge>{{1, 2, -1}}));
  auto split = frustration_report(g, m({0, 0, 1}));
  EXPECT_EQ(split.frustrated_edges, (std::vector<SignedEdge>{{0, 2, 1}}));
  SignedGraph balanced(3, {{0, 1, 1}, {0, 2, -1}});
  auto none = frustration_report(balanced, m({0, 0, 1}));
  EXPECT_EQ(none.imbalance, 0);
  EXPECT_TRUE(none.frustrated_edges.empty());
}

TEST(MoveDelta, FrustratedTriangleSplitKeepsImbalance) {
  // Recomputed: {0,1,2} has I = 1 (edge 12), {0,1},{2} has I = 1 (edge 02).
  auto g = frustrated_triangle();
  auto p = m({0, 0, 0});
  EXPECT_EQ(move_delta(g, p, 2, 1), 0);
  EXPECT_EQ(imbalance(g, m({0, 0, 1})) - imbalance(g, p), 0);
}

TEST(MoveDelta, IsolatedVertex) {
  SignedGraph g(3, {{0, 1, 1}});
  EXPECT_EQ(move_delta(g, m({0, 0, 1}), 2, 0), 0);
}

TEST(MoveDelta, BalancedCrossMovesArePositive) {
  SignedGraph g(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, -1}, {1, 3, -1}, {0, 3, -1}, {1, 2, -1}});
  auto p = m({0, 0, 1, 1});
  for (Vertex u = 0; u < 4; ++u)
    for (int t = 0; t <= 2; ++t)
      if (t != p[u]) EXPECT_GT(move_delta(g, p, u, t), 0);
}

TEST(MoveDelta, Errors) {
  auto g = frustrated_triangle();
  auto p = m({0, 0, 1});
  EXPECT_THROW(move_delta(g, p, 0, 0), InputError);
  EXPECT_THROW(move_delta(g, p, 0, 3), InputError);
  EXPECT_THROW(move_delta(g, p, 5, 1), InputError);
}

TEST(MoveDelta, MatchesRecomputation) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    auto g = enumcc::testing::random_graph(rng, 9, 0.5, 0.5);
    auto p = canonicalize(enumcc::testing::random_labels(rng, 9, 4));
    Vertex u = static_cast<Vertex>(rng() % 9);
    int target = static_cast<int>(rng() % (p.num_modules() + 1));
    if (target == p[u]) continue;
    auto moved = p.labels();
    moved[u] = target;
    EXPECT_EQ(move_delta(g, p, u, target), imbalance(g, moved) - imbalance(g, p));
  }
}

TEST(MoveDelta, OptimaAreSingleMoveStable) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto g = enumcc::testing::random_graph(rng, 7, 0.6, 0.5);
    for (const auto& p : oracle_optima(g).sorted())
      for (Vertex u = 0; u < g.n(); ++u)
        for (int target = 0; target <= p.num_modules(); ++target)
          if (target != p[u]) EXPECT_GE(move_delta(g, p, u, target), 0);
  }
}
