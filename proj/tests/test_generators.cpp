#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "enumcc/errors.hpp"
#include "enumcc/generators.hpp"
#include "enumcc/oracle.hpp"
#include "enumcc/rng.hpp"

using namespace enumcc;

namespace {

GeneratorConfig config(int n, int l0, double q_m, double d, double q_neg, std::uint64_t seed) {
  GeneratorConfig c;
  c.n = n;
  c.l0 = l0;
  c.q_m = q_m;
  c.d = d;
  c.q_neg = q_neg;
  c.seed = seed;
  return c;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("enumcc_gen_" + name);
  std::ofstream(path) << text;
  return path;
}

int ingest_error_line(const std::string& text, EdgeListFormat format) {
  auto path = write_temp("bad.txt", text);
  try {
    ingest_real(path.string(), format);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST(Rng, DeterministicAndInRange) {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(r.below(13), 13u);
    double u = r.unit();
    EXPECT_TRUE(u >= 0 && u < 1);
  }
  EXPECT_THROW(r.below(0), InputError);
  auto s = r.sample(50, 20);
  std::set<std::uint64_t> distinct(s.begin(), s.end());
  EXPECT_EQ(distinct.size(), 20u);
  EXPECT_LT(*distinct.rbegin(), 50u);
}

TEST(Planted, ModuleSizes) {
  EXPECT_EQ(planted_modules(10, 3).module_sizes(), (std::vector<int>{4, 3, 3}));
  EXPECT_EQ(planted_modules(6, 6).num_modules(), 6);
  EXPECT_THROW(planted_modules(3, 4), InputError);
}

TEST(Dataset1, CompleteBalancedGraph) {
  auto inst = gen_dataset1(config(9, 3, 0, 1, 0.5, 1));
  EXPECT_EQ(inst.graph.m(), 36);
  EXPECT_EQ(imbalance(inst.graph, inst.planted), 0);
  EXPECT_EQ(inst.graph.m_neg(), 27);
}

TEST(Dataset1, MisplacedEdgeCounts) {
  auto inst = gen_dataset1(config(9, 3, 0.1, 1, 0.5, 2));
  // One of 9 internal and 3 of 27 external pairs are misplaced.
  EXPECT_EQ(imbalance(inst.graph, inst.planted), 4);
  EXPECT_EQ(inst.graph.m_neg(), 27 - 3 + 1);
}

TEST(Dataset1, DeterministicPerSeed) {
  auto a = gen_dataset1(config(20, 4, 0.1, 0.5, 0.7, 9));
  auto b = gen_dataset1(config(20, 4, 0.1, 0.5, 0.7, 9));
  auto c = gen_dataset1(config(20, 4, 0.1, 0.5, 0.7, 10));
  EXPECT_EQ(a.graph.edges(), b.graph.edges());
  EXPECT_NE(a.graph.edges(), c.graph.edges());
}

TEST(Dataset1, NegativeShareWithinTolerance) {
  int generated = 0;
  for (double d : {0.25, 0.5, 0.75})
    for (double q_neg : {0.3, 0.5, 0.7})
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        PlantedInstance inst;
        try {
          inst = gen_dataset1(config(24, 3, 0.05, d, q_neg, seed));
        } catch (const GenerationError&) {
          continue;  // too few internal pairs for a low negative share
        }
        ++generated;
        ASSERT_NEAR(inst.q_neg_achieved, q_neg, 0.02) << d << " " << q_neg << " " << seed;
        ASSERT_EQ(inst.graph.m(), std::llround(d * 24 * 23 / 2));
      }
  EXPECT_GE(generated, 6 * 50);
}

TEST(Dataset1, InfeasibleShareIsReported) {
  // Two modules of 10: only 90 internal pairs against 100 external ones.
  EXPECT_THROW(gen_dataset1(config(20, 2, 0, 0.9, 0.05, 1)), GenerationError);
}

TEST(Dataset1, Validation) {
  EXPECT_THROW(gen_dataset1(config(0, 1, 0, 1, 0.5, 1)), InputError);
  EXPECT_THROW(gen_dataset1(config(5, 6, 0, 1, 0.5, 1)), InputError);
  EXPECT_THROW(gen_dataset1(config(5, 2, 1.5, 1, 0.5, 1)), InputError);
  EXPECT_THROW(gen_dataset1(config(5, 2, 0, 0, 0.5, 1)), InputError);
  EXPECT_THROW(gen_dataset1(config(5, 2, 0, 1, -0.1, 1)), InputError);
}

TEST(Dataset2, PlantedPartitionStaysOptimal) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (double d : {1.0, 0.6}) {
      auto inst = gen_dataset2(config(9, 3, 0.1, d, 0.5, seed));
      auto optima = oracle_optima(inst.graph);
      ASSERT_TRUE(optima.contains(inst.planted)) << seed;
      EXPECT_EQ(imbalance(inst.graph, inst.planted), optima.istar());
      long long accepted = 0;
      for (const auto& step : inst.log) accepted += step.accepted;
      EXPECT_EQ(inst.warning, accepted < std::llround(0.1 * std::llround(d * 36)));
      if (d == 1.0)
        for (const auto& step : inst.log) EXPECT_EQ(step.kind, PerturbationKind::flip);
    }
  }
}

TEST(Dataset2, LargeInstancesUseTheMarginRule) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto inst = gen_dataset2(config(30, 3, 0.02, 1, 0.5, seed));
    EXPECT_TRUE(single_move_optimal(inst.graph, inst.planted));
    EXPECT_FALSE(inst.log.empty());
  }
}

TEST(Dataset2, AttemptBudgetTriggersWarning) {
  auto cfg = config(9, 3, 0.5, 1, 0.5, 3);
  cfg.max_attempts = 2;
  auto inst = gen_dataset2(cfg);
  EXPECT_LE(inst.log.size(), 2u);
  EXPECT_TRUE(inst.warning);
}

TEST(Margin, BalancedExamples) {
  // Two complete modules of 3 joined by all 9 negative pairs.
  auto inst = gen_dataset1(config(6, 2, 0, 1, 0.5, 1));
  EXPECT_EQ(balanced_margin(inst.graph, inst.planted), 2);
  SignedGraph path(4, {{0, 1, 1}, {2, 3, 1}, {0, 2, -1}});
  EXPECT_EQ(balanced_margin(path, Membership::from_canonical({0, 0, 1, 1})), 1);
  EXPECT_EQ(balanced_margin(path, Membership::from_canonical({0, 0, 0, 1})), 0);
}

TEST(Margin, BoundsEveryOtherPartition) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto inst = gen_dataset1(config(8, 3, 0, 0.7, 0.7, seed));
    int margin = balanced_margin(inst.graph, inst.planted);
    for (const auto& p : enumerate_partitions(8))
      if (p != inst.planted) ASSERT_GE(imbalance(inst.graph, p), margin);
  }
}

TEST(SingleMove, Examples) {
  auto g = SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
  EXPECT_TRUE(single_move_optimal(g, Membership::from_canonical({0, 0, 1})));
  EXPECT_FALSE(single_move_optimal(g, Membership::from_canonical({0, 1, 2})));
  EXPECT_FALSE(single_move_optimal(SignedGraph(2, {{0, 1, -1}}), Membership::from_canonical({0, 0})));
}

TEST(Ingest, KeepsLargestPositiveComponent) {
  auto path = write_temp("comp.txt",
                         "a b +1\nb c +1\nc d +1\nd e +1\n"
                         "f g +1\ng h +1\n"
                         "e f -1\n"
                         "a a +1\n"
                         "b a +1\n");
  auto res = ingest_real(path.string(), EdgeListFormat::whitespace);
  EXPECT_EQ(res.vertices_read, 8);
  EXPECT_EQ(res.edges_read, 9);
  EXPECT_EQ(res.graph.n(), 5);
  EXPECT_EQ(res.graph.m(), 4);
  EXPECT_EQ(res.dropped_vertices, 3);
  EXPECT_EQ(res.dropped_edges, 5);
  EXPECT_EQ(res.names, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
}

TEST(Ingest, CsvWithHeader) {
  auto path = write_temp("ok.csv", "Source,Target,Sign\nx,y,1\ny,z,-1\nz,x,+1\n");
  auto res = ingest_real(path.string(), EdgeListFormat::csv);
  EXPECT_EQ(res.graph.n(), 3);
  EXPECT_EQ(res.graph.m(), 3);
  EXPECT_EQ(res.graph.sign(1, 2), -1);
}

TEST(Ingest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(ingest_error_line("a b +1\nb c\n", EdgeListFormat::whitespace), 2);
  EXPECT_EQ(ingest_error_line("a b +1\n# note\nb a -1\n", EdgeListFormat::whitespace), 3);
  EXPECT_EQ(ingest_error_line("a b 0\n", EdgeListFormat::whitespace), 1);
  EXPECT_EQ(ingest_error_line("u,v,w\na,b,1\n", EdgeListFormat::csv), 1);
  EXPECT_THROW(ingest_real("/nonexistent/file", EdgeListFormat::csv), InputError);
  EXPECT_EQ(parse_edge_list_format("tsv"), EdgeListFormat::whitespace);
  EXPECT_THROW(parse_edge_list_format("xml"), InputError);
}
