#pragma once

#include <span>
#include <vector>

#include "enumcc/partition.hpp"

namespace enumcc {

// cells[i * cols + j] = number of vertices with source label i and target label j.
struct ConfusionMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> cells;

  int at(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }
};

// Injective map from source labels to target labels maximizing the overlap.
// map[i] is the target label matched with source label i, or -1 when the
// source has more modules than the target.
struct Alignment {
  std::vector<int> map;
  int score = 0;
};

ConfusionMatrix confusion(std::span<const int> ps, std::span<const int> pt);
inline ConfusionMatrix confusion(const Membership& ps, const Membership& pt) {
  return confusion(ps.labels(), pt.labels());
}

// Maximum-score alignment; among equal scores the lexicographically smallest map.
Alignment align(const Membership& ps, const Membership& pt);

// Target labels rewritten into the source label space: target f(i) becomes i,
// unmatched target labels become num_modules(ps), num_modules(ps)+1, ... in
// increasing order of their original label.
std::vector<int> aligned_target(const Membership& ps, const Membership& pt, const Alignment& a);

// Maximum overlap over all injections, without tie-breaking.
int alignment_score(std::span<const int> ps, std::span<const int> pt);

int edit_distance(std::span<const int> ps, std::span<const int> pt);
inline int edit_distance(const Membership& ps, const Membership& pt) {
  return edit_distance(ps.labels(), pt.labels());
}

VertexSet moving_set(std::span<const int> ps, std::span<const int> pt_aligned);

// Maximum-weight assignment on a rows x cols matrix with rows <= cols.
// Returns the column assigned to each row.
std::vector<int> max_weight_assignment(const std::vector<int>& weights, int rows, int cols);

}  // namespace enumcc
