#include <gtest/gtest.h>

#include <numeric>

#include "enumcc/editdist.hpp"
#include "enumcc/errors.hpp"
#include "support.hpp"

using namespace enumcc;
using enumcc::testing::injection_distance;

namespace {
Membership m(std::vector<int> labels) { return Membership::from_labels(labels); }
}  // namespace

TEST(Confusion, Examples) {
  auto same = confusion(m({0, 0, 1}), m({0, 0, 1}));
  EXPECT_EQ(same.rows, 2);
  EXPECT_EQ(same.cells, (std::vector<int>{2, 0, 0, 1}));
  std::vector<int> a{0, 0, 1, 1}, b{1, 1, 0, 0};
  EXPECT_EQ(confusion(a, b).cells, (std::vector<int>{0, 2, 2, 0}));
  auto wide = confusion(m({0, 0, 0}), m({0, 1, 2}));
  EXPECT_EQ(wide.rows, 1);
  EXPECT_EQ(wide.cols, 3);
  EXPECT_EQ(wide.cells, (std::vector<int>{1, 1, 1}));
  std::vector<int> shorter{0, 1};
  EXPECT_THROW(confusion(a, shorter), InputError);
}

TEST(Confusion, Marginals) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    auto a = m(enumcc::testing::random_labels(rng, 10, 4));
    auto b = m(enumcc::testing::random_labels(rng, 10, 4));
    auto cm = confusion(a, b);
    EXPECT_EQ(std::accumulate(cm.cells.begin(), cm.cells.end(), 0), 10);
    auto rows = a.module_sizes();
    for (int i = 0; i < cm.rows; ++i) {
      int sum = 0;
      for (int j = 0; j < cm.cols; ++j) sum += cm.at(i, j);
      EXPECT_EQ(sum, rows[i]);
    }
  }
}

TEST(Align, SwapAndIdentity) {
  auto a = align(m({0, 0, 1, 1}), m({1, 1, 0, 0}));
  EXPECT_EQ(a.score, 4);
  auto p = m({0, 1, 0, 2, 1});
  auto id = align(p, p);
  EXPECT_EQ(id.map, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(id.score, 5);
}

TEST(Align, TwoMovePair) {
  auto ps = m({0, 0, 1, 1, 1});
  auto pt_prime = m({1, 0, 0, 1, 0});
  auto a = align(ps, pt_prime);
  EXPECT_EQ(a.score, 3);
  EXPECT_EQ(edit_distance(ps, pt_prime), 2);
}

TEST(Align, MoreSourceModulesThanTarget) {
  auto ps = m({0, 1, 2, 2});
  auto pt = m({0, 0, 1, 1});
  auto a = align(ps, pt);
  EXPECT_EQ(a.score, 3);
  int unmatched = static_cast<int>(std::count(a.map.begin(), a.map.end(), -1));
  EXPECT_EQ(unmatched, 1);
}

TEST(Align, LexicographicTieBreak) {
  // Both source modules overlap both target modules by one vertex.
  auto ps = m({0, 0, 1, 1});
  auto pt = m({0, 1, 0, 1});
  auto a = align(ps, pt);
  EXPECT_EQ(a.map, (std::vector<int>{0, 1}));
}

TEST(AlignedTarget, UnmatchedLabelsAreRenumbered) {
  auto ps = m({0, 0, 0, 1});
  auto pt = m({0, 1, 2, 3});
  auto a = align(ps, pt);
  auto t = aligned_target(ps, pt, a);
  EXPECT_EQ(t, (std::vector<int>{0, 2, 3, 1}));
  EXPECT_EQ(static_cast<int>(moving_set(ps.labels(), t).size()), edit_distance(ps, pt));
}

TEST(EditDistance, TwoMoveExample) {
  auto ps = m({0, 0, 1, 1, 1});
  auto pt = m({0, 1, 1, 0, 1});
  EXPECT_EQ(edit_distance(ps, pt), 2);
  auto t = aligned_target(ps, pt, align(ps, pt));
  EXPECT_EQ(moving_set(ps.labels(), t), (VertexSet{1, 3}));
}

TEST(EditDistance, Identity) {
  auto p = m({0, 1, 0, 2});
  EXPECT_EQ(edit_distance(p, p), 0);
  EXPECT_TRUE(moving_set(p.labels(), p.labels()).empty());
}

TEST(MovingSet, SingleDifference) {
  std::vector<int> a{0, 0, 1}, b{0, 1, 1};
  EXPECT_EQ(moving_set(a, b), (VertexSet{1}));
}

TEST(EditDistance, MatchesExhaustiveInjectionSearch) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng() % 8);
    auto a = enumcc::testing::random_labels(rng, n, 4);
    auto b = enumcc::testing::random_labels(rng, n, 4);
    ASSERT_EQ(edit_distance(a, b), injection_distance(a, b)) << t;
  }
}

TEST(EditDistance, MetricProperties) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 8);
    auto a = m(enumcc::testing::random_labels(rng, n, 4));
    auto b = m(enumcc::testing::random_labels(rng, n, 4));
    auto c = m(enumcc::testing::random_labels(rng, n, 4));
    EXPECT_EQ(edit_distance(a, b), edit_distance(b, a));
    EXPECT_EQ(edit_distance(a, b) == 0, a == b);
    EXPECT_LE(edit_distance(a, c), edit_distance(a, b) + edit_distance(b, c));
  }
}

TEST(EditDistance, AlignScoreIsMaximalUpToFiveModules) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 300; ++t) {
    int n = 3 + static_cast<int>(rng() % 7);
    auto a = m(enumcc::testing::random_labels(rng, n, 5));
    auto b = m(enumcc::testing::random_labels(rng, n, 5));
    auto al = align(a, b);
    EXPECT_EQ(al.score, n - injection_distance(a.labels(), b.labels()));
    std::vector<int> seen;
    for (int x : al.map)
      if (x >= 0) seen.push_back(x);
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  }
}

TEST(Assignment, MatchesPermutationSearch) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 200; ++t) {
    int rows = 1 + static_cast<int>(rng() % 4);
    int cols = rows + static_cast<int>(rng() % 3);
    std::vector<int> w(rows * cols);
    for (auto& x : w) x = static_cast<int>(rng() % 6);
    auto assign = max_weight_assignment(w, rows, cols);
    int got = 0;
    for (int i = 0; i < rows; ++i) got += w[i * cols + assign[i]];
    std::vector<int> perm(cols);
    std::iota(perm.begin(), perm.end(), 0);
    int best = 0;
    do {
      int s = 0;
      for (int i = 0; i < rows; ++i) s += w[i * cols + perm[i]];
      best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(got, best);
  }
}
