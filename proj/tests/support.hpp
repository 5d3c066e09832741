#pragma once

// Independent reference implementations used only by tests. They share no
// code with the library beyond the graph container.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"

namespace enumcc::testing {

inline SignedGraph frustrated_triangle() { return SignedGraph(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}}); }

inline SignedGraph random_graph(std::mt19937_64& rng, int n, double density, double q_neg) {
  std::uniform_real_distribution<double> unit(0, 1);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < density) edges.push_back({u, v, unit(rng) < q_neg ? -1 : 1});
  return SignedGraph(n, edges);
}

inline std::vector<int> random_labels(std::mt19937_64& rng, int n, int max_labels) {
  std::uniform_int_distribution<int> pick(0, max_labels - 1);
  std::vector<int> labels(n);
  for (auto& l : labels) l = pick(rng);
  return labels;
}

inline int naive_imbalance(const SignedGraph& g, const std::vector<int>& labels) {
  int total = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      int s = g.sign(u, v);
      if (s > 0 && labels[u] != labels[v]) ++total;
      if (s < 0 && labels[u] == labels[v]) ++total;
    }
  return total;
}

// Partitions of {0..n-1} as sorted block lists, built element by element.
inline std::vector<std::vector<int>> naive_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(block);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) return {{}};
  rec(0, 0);
  return out;
}

// Same partition, regardless of label names.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

// n minus the best overlap over every partial injective label map.
inline int injection_distance(const std::vector<int>& a, const std::vector<int>& b) {
  int la = *std::max_element(a.begin(), a.end()) + 1;
  int lb = *std::max_element(b.begin(), b.end()) + 1;
  std::vector<std::vector<int>> overlap(la, std::vector<int>(lb, 0));
  for (std::size_t i = 0; i < a.size(); ++i) overlap[a[i]][b[i]]++;
  std::vector<bool> used(lb, false);
  std::function<int(int)> best = [&](int i) -> int {
    if (i == la) return 0;
    int result = best(i + 1);  // label i unmatched
    for (int j = 0; j < lb; ++j)
      if (!used[j]) {
        used[j] = true;
        result = std::max(result, overlap[i][j] + best(i + 1));
        used[j] = false;
      }
    return result;
  };
  return static_cast<int>(a.size()) - best(0);
}

}  // namespace enumcc::testing
