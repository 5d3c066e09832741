#pragma once

#include <array>
#include <span>
#include <vector>

namespace enumcc {

// Abstract relational pattern of a 2- or 3-vertex edit between two optima.
// Labels are pattern-local: equal labels mean the same module; target labels
// not occurring among the sources denote modules no mover comes from.
// Sign vectors are indexed by mover pairs (0,1), (0,2), (1,2), with 0 for
// "no edge"; for 2-vertex scenarios only the first entry is meaningful.
struct EditScenario {
  char id;
  int movers;
  std::array<int, 3> source;
  std::array<int, 3> target;
  std::vector<std::array<int, 3>> admissible;
};

// Two-vertex table: (a) shared source and target, (b) swap, (c) shared
// source only, (d) shared target only, (e) chain.
std::span<const EditScenario> two_edit_scenarios();
// Seventeen 3-vertex scenarios labeled a..r (no q).
std::span<const EditScenario> three_edit_scenarios();

// Index of the pair (x, y), x < y, in a scenario sign vector.
constexpr int pair_slot(int x, int y) { return x + y - 1; }

// True iff some scenario whose source pattern matches `source` (up to
// relabeling and mover order) admits the given pair signs.
bool scenario_admits_sources(std::span<const int> source, std::span<const int> pair_signs);

// True iff the scenario matching (source, target) exists and admits the signs.
// Only the equality pattern of the labels matters.
bool scenario_admits(std::span<const int> source, std::span<const int> target,
                     std::span<const int> pair_signs);

}  // namespace enumcc
