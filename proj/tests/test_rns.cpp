#include <gtest/gtest.h>

#include <deque>

#include "enumcc/errors.hpp"
#include "enumcc/oracle.hpp"
#include "enumcc/rns.hpp"
#include "support.hpp"

using namespace enumcc;

namespace {

// Closure by repeated sweeps over a growing set, last-in first-out, against
// the brute-force neighborhood.
std::set<Membership> closure(const SignedGraph& g, const Membership& p, int r_max) {
  std::set<Membership> seen{p};
  std::vector<Membership> stack{p};
  while (!stack.empty()) {
    auto cur = stack.back();
    stack.pop_back();
    for (int r = 1; r <= r_max && r < g.n(); ++r)
      for (const auto& q : cons_bruteforce(g, cur, r))
        if (seen.insert(q).second) stack.push_back(q);
  }
  return seen;
}

std::set<Membership> as_set(const SolutionSet& s) {
  auto v = s.sorted();
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Rns, TriangleReachesAllThreeOptima) {
  auto g = enumcc::testing::frustrated_triangle();
  auto res = rns(g, Membership::from_canonical({0, 0, 0}), 1);
  EXPECT_EQ(res.discovered.size(), 3u);
  EXPECT_EQ(res.discovered.istar(), 1);
  EXPECT_EQ(res.stats.found_per_level, (std::vector<std::uint64_t>{2}));
  EXPECT_FALSE(res.stopped);
}

TEST(Rns, MatchesIndependentClosureAndStaysInsideOptima) {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 40; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = enumcc::testing::random_graph(rng, n, 0.6, 0.5);
    auto oracle = oracle_optima(g);
    auto all = oracle.sorted();
    for (int r_max = 1; r_max <= 3; ++r_max) {
      auto got = as_set(rns(g, all.back(), r_max).discovered);
      EXPECT_EQ(got, closure(g, all.back(), r_max));
      for (const auto& p : got) EXPECT_TRUE(oracle.contains(p));
    }
  }
}

TEST(Rns, GrowsWithRadius) {
  std::mt19937_64 rng(93);
  for (int t = 0; t < 20; ++t) {
    auto g = enumcc::testing::random_graph(rng, 7, 0.5, 0.5);
    auto ps = oracle_optima(g).sorted().front();
    auto prev = as_set(rns(g, ps, 1).discovered);
    for (int r_max = 2; r_max <= 4; ++r_max) {
      auto cur = as_set(rns(g, ps, r_max).discovered);
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }
  }
}

TEST(Rns, OutputIsClosedUnderCons) {
  std::mt19937_64 rng(95);
  for (int t = 0; t < 10; ++t) {
    auto g = enumcc::testing::random_graph(rng, 7, 0.5, 0.5);
    auto res = rns(g, oracle_optima(g).sorted().front(), 2);
    for (const auto& p : res.discovered.sorted())
      for (int r = 1; r <= 2; ++r)
        for (const auto& q : cons(g, p, r).neighbors) EXPECT_TRUE(res.discovered.contains(q));
  }
}

TEST(Rns, IntoSkipsKnownPartitions) {
  auto g = enumcc::testing::frustrated_triangle();
  SolutionSet known(1);
  known.insert(Membership::from_canonical({0, 0, 1}));
  auto res = rns_into(g, Membership::from_canonical({0, 0, 0}), 1, known);
  EXPECT_EQ(res.discovered.size(), 2u);
  EXPECT_EQ(known.size(), 3u);
  EXPECT_GE(res.stats.duplicates, 1u);
}

TEST(Rns, StopPredicateHalts) {
  auto g = enumcc::testing::frustrated_triangle();
  RnsOptions options;
  options.stop = [](const SolutionSet& s) { return s.size() >= 1; };
  auto res = rns(g, Membership::from_canonical({0, 0, 0}), 1, options);
  EXPECT_TRUE(res.stopped);
  EXPECT_EQ(res.discovered.size(), 1u);
}

TEST(Rns, RejectsBadArguments) {
  auto g = enumcc::testing::frustrated_triangle();
  EXPECT_THROW(rns(g, Membership::from_canonical({0, 0, 0}), 0), InputError);
  EXPECT_THROW(rns(g, Membership::from_canonical({0, 0}), 1), InputError);
}
