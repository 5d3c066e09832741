#include <gtest/gtest.h>

#include "enumcc/enumcc.hpp"
#include "enumcc/errors.hpp"
#include "enumcc/generators.hpp"
#include "enumcc/oracle.hpp"
#include "support.hpp"

using namespace enumcc;

TEST(EnumCC, FrustratedTriangle) {
  auto res = enum_cc(enumcc::testing::frustrated_triangle(), 1);
  EXPECT_EQ(res.solutions.size(), 3u);
  EXPECT_EQ(res.stats.istar, 1);
  EXPECT_TRUE(res.stats.complete);
  EXPECT_EQ(res.stats.reason, Termination::exhausted);
  EXPECT_EQ(res.stats.solutions_found, 3u);
}

TEST(EnumCC, UniqueOptimumNeedsOneJump) {
  GeneratorConfig cfg;
  cfg.n = 9;
  auto inst = gen_dataset1(cfg);
  auto res = enum_cc(inst.graph, 3);
  EXPECT_EQ(res.solutions.size(), 1u);
  EXPECT_TRUE(res.solutions.contains(inst.planted));
  EXPECT_EQ(res.stats.n_jump, 1u);
  EXPECT_EQ(res.stats.n_rns, 1u);
}

TEST(EnumCC, AllModesMatchTheOracle) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 40; ++t) {
    int n = 3 + static_cast<int>(rng() % 6);
    auto g = enumcc::testing::random_graph(rng, n, 0.3 + 0.1 * (rng() % 7), 0.5);
    auto oracle = oracle_optima(g);
    for (int r_max : {1, 2, 3}) {
      EnumLimits e;
      EXPECT_EQ(enum_cc(g, r_max, e).solutions, oracle);
      EnumLimits s;
      s.mode = EnumMode::sequential;
      auto seq = enum_cc(g, r_max, s);
      EXPECT_EQ(seq.solutions, oracle);
      EXPECT_EQ(seq.stats.n_jump, oracle.size());
    }
    EnumLimits r;
    r.mode = EnumMode::rns_only;
    auto partial = enum_cc(g, 2, r);
    EXPECT_FALSE(partial.stats.complete);
    for (const auto& p : partial.solutions.sorted()) EXPECT_TRUE(oracle.contains(p));
  }
}

TEST(EnumCC, SolutionCapTruncates) {
  auto g = SignedGraph(6, {});
  EnumLimits lim;
  lim.max_solutions = 10;
  auto res = enum_cc(g, 2, lim);
  EXPECT_EQ(res.solutions.size(), 10u);
  EXPECT_EQ(res.stats.reason, Termination::solution_cap);
  EXPECT_FALSE(res.stats.complete);
}

TEST(EnumCC, TimeCapStopsEarly) {
  EnumLimits lim;
  lim.time_seconds = 0;
  auto res = enum_cc(SignedGraph(8, {}), 2, lim);
  EXPECT_EQ(res.stats.reason, Termination::time_cap);
  EXPECT_FALSE(res.stats.complete);
}

TEST(EnumCC, ResultDoesNotDependOnRadius) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    auto g = enumcc::testing::random_graph(rng, 9, 0.4, 0.5);
    auto base = enum_cc(g, 1).solutions;
    for (int r_max = 2; r_max <= 4; ++r_max) EXPECT_EQ(enum_cc(g, r_max).solutions, base);
  }
}

TEST(EnumCC, ModeNamesAndErrors) {
  EXPECT_EQ(parse_mode("rns-only"), EnumMode::rns_only);
  EXPECT_EQ(to_string(EnumMode::sequential), "sequential");
  EXPECT_EQ(to_string(Termination::solution_cap), "solution_cap");
  EXPECT_THROW(parse_mode("fast"), InputError);
  EXPECT_THROW(enum_cc(SignedGraph(3, {}), 0), InputError);
  EnumLimits lim;
  lim.max_solutions = 0;
  EXPECT_THROW(enum_cc(SignedGraph(3, {}), 1, lim), InputError);
}
