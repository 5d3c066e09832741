#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"
#include "enumcc/solution_set.hpp"

namespace enumcc {

// x_uv for u < v, 1 when u and v share a module.
class RelationVector {
 public:
  explicit RelationVector(int n = 0) : n_(n), x_(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2, 0) {}

  int n() const { return n_; }
  int get(Vertex u, Vertex v) const { return x_[index(u, v)]; }
  void set(Vertex u, Vertex v, int value) { x_[index(u, v)] = static_cast<std::uint8_t>(value != 0); }

 private:
  std::size_t index(Vertex u, Vertex v) const;

  int n_;
  std::vector<std::uint8_t> x_;
};

RelationVector to_relations(const Membership& p);

// Triples (i, j, k), i < j < k, where exactly two of the three pairs are related.
std::vector<std::array<Vertex, 3>> check_triangle(const RelationVector& x);

// Imbalance of the partition encoded by x. Throws InputError if x is not transitive.
int eval_objective(const SignedGraph& g, const RelationVector& x);

// sum_{s x t} x - sum_{pairs in s} x - sum_{pairs in t} x <= min(|s|, |t|).
bool check_two_partition(const RelationVector& x, std::span<const Vertex> s, std::span<const Vertex> t);

// Odd cycle v1..vk, k >= 5: sum over cycle edges minus sum over the chords
// v_i v_{i+2} (i = 1..k-2), v_1 v_{k-1} and v_2 v_k is at most floor(k/2).
bool check_two_chorded_cycle(const RelationVector& x, std::span<const Vertex> cycle);

struct SolverBudget {
  double seconds = std::numeric_limits<double>::infinity();
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

class SolverTimeout : public std::runtime_error {
 public:
  SolverTimeout(const std::string& what, std::optional<Membership> incumbent, int value)
      : std::runtime_error(what), incumbent_(std::move(incumbent)), value_(value) {}
  const std::optional<Membership>& incumbent() const { return incumbent_; }
  int incumbent_value() const { return value_; }

 private:
  std::optional<Membership> incumbent_;
  int value_;
};

struct SolveResult {
  Membership partition;
  int istar = 0;
  std::uint64_t nodes = 0;
};

SolveResult solve_first(const SignedGraph& g, const SolverBudget& budget = {});

struct JumpResult {
  std::optional<Membership> partition;
  std::uint64_t nodes = 0;
};

// An optimal partition at imbalance istar that is not in s, or none.
// Throws SolverTimeout when the budget runs out first.
JumpResult jump(const SignedGraph& g, const SolutionSet& s, int istar, const SolverBudget& budget = {});

// Vertices by descending |deg+ - deg-|, ties by id.
std::vector<Vertex> branching_order(const SignedGraph& g);

// Bound used at a search node: prefix holds restricted-growth labels of the
// first prefix.size() vertices of `order`.
int completion_lower_bound(const SignedGraph& g, std::span<const Vertex> order, std::span<const int> prefix);

// Local-search upper bound used to seed the exact search.
Membership greedy_partition(const SignedGraph& g);

}  // namespace enumcc
