#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"

namespace enumcc {

struct GeneratorConfig {
  int n = 10;
  int l0 = 3;
  double q_m = 0.0;    // misplaced-edge proportion (dataset2: accepted perturbations / m)
  double d = 1.0;      // density
  double q_neg = 0.5;  // target |E-| / |E|, ignored for d = 1 and by dataset2
  std::uint64_t seed = 1;
  // dataset2 only: perturbation attempts before giving up; 0 picks 20 * target + 100.
  int max_attempts = 0;

  void validate() const;
};

enum class PerturbationKind { flip, add, remove };

struct Perturbation {
  PerturbationKind kind;
  SignedEdge edge;  // sign after the step (the removed sign for `remove`)
  bool accepted;
};

struct PlantedInstance {
  SignedGraph graph;
  Membership planted;
  std::vector<Perturbation> log;
  bool warning = false;  // dataset2 stopped short of its target
  double q_neg_achieved = 0;
};

std::string to_string(PerturbationKind kind);

// Contiguous modules; the first n mod l0 modules hold one extra vertex.
Membership planted_modules(int n, int l0);

PlantedInstance gen_dataset1(const GeneratorConfig& cfg);
PlantedInstance gen_dataset2(const GeneratorConfig& cfg);

// Lower bound on the imbalance of every partition other than `planted` in a
// graph where `planted` has imbalance 0: the smallest positive min-cut of a
// module or negative edge count between two modules.
int balanced_margin(const SignedGraph& g, const Membership& planted);

// No single vertex move lowers the imbalance.
bool single_move_optimal(const SignedGraph& g, const Membership& p);

enum class EdgeListFormat { graph, csv, whitespace };

EdgeListFormat parse_edge_list_format(const std::string& text);

struct IngestResult {
  SignedGraph graph;
  std::vector<std::string> names;  // new id -> vertex name in the file
  int vertices_read = 0;
  int edges_read = 0;
  int dropped_vertices = 0;
  int dropped_edges = 0;
};

// Keeps the largest connected component of the positive subgraph (lowest
// first-seen vertex on ties), re-indexed in order of first appearance.
IngestResult ingest_real(const std::string& path, EdgeListFormat format);

}  // namespace enumcc
