#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"

namespace enumcc {

// Target placeholder for a mover whose module is not decided yet. Such a
// mover is known to end in a module that no mover comes from.
inline constexpr int kUnknownTarget = -1;

// Unknown movers grouped into one shared, still unnamed module.
constexpr int coupled_target(int group) { return -2 - group; }
constexpr bool is_coupled(int target) { return target <= -2; }
constexpr bool is_resolved(int target) { return target >= 0; }

// Moving vertices with per-mover source and target labels. Resolved target
// labels live in the source label space; labels >= num_modules(source) are
// new modules.
struct EditOperation {
  VertexSet moving;
  std::vector<int> source;
  std::vector<int> target;

  int cost() const { return static_cast<int>(moving.size()); }
  bool resolved() const;

  // Operation turning ps into the partition given by pt_aligned.
  static EditOperation between(const Membership& ps, std::span<const int> pt_aligned);
};

// Labels of ps with every mover placed at its resolved target.
std::vector<int> apply(const Membership& ps, const EditOperation& op);

struct InteractionGraph {
  VertexSet vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;

  bool connected() const;
};

struct MvmoTerms {
  int source_side = 0;
  int target_side = 0;

  int margin() const { return source_side - target_side; }
};

// Edges of g between movers that share a source or target module.
// Unknown targets match nothing.
InteractionGraph interaction_graph(const SignedGraph& g, const EditOperation& op);

// False when relabeling two modules of the target yields a cheaper operation.
// Pairs involving unresolved targets pass.
bool is_min_edit(const Membership& ps, const EditOperation& op);

// Checks valid before any target is known: g[moving] is connected and no split
// of the movers whose crossing edges are all co-sourced can carry an
// interaction worth an atomic move.
bool int_atomic(const SignedGraph& g, const Membership& ps, std::span<const Vertex> moving);

// Checks on partially or fully known targets: min-edit, no equal-imbalance
// sub-operation among resolved movers, no non-interacting split (interaction
// connectivity and target-side spurious edges).
bool ext_atomic(const SignedGraph& g, const Membership& ps, const EditOperation& op);

// Interaction terms of mover u measured against the source and target
// labels of the other movers. Unknown targets contribute 0.
MvmoTerms mvmo_terms(const SignedGraph& g, const EditOperation& op, Vertex u);

// Targets unknown. 2 or 3 movers: some tabulated scenario admits the signs.
// More movers: every split of the movers can still carry an interaction of 2.
bool int_mvmo(const SignedGraph& g, const Membership& ps, std::span<const Vertex> moving);

// The integer margin for every mover and every split of the movers, using
// exact terms where targets allow and upper bounds otherwise; for 2 or 3
// movers with no Unknown target, the scenario table.
bool ext_mvmo(const SignedGraph& g, const Membership& ps, const EditOperation& op);

struct PruningOptions {
  bool int_atomic = true;
  bool ext_atomic = true;
  bool int_mvmo = true;
  bool ext_mvmo = true;
  bool min_edit = true;

  static PruningOptions all() { return {}; }
  static PruningOptions none() { return {false, false, false, false, false}; }
  bool any() const { return int_atomic || ext_atomic || int_mvmo || ext_mvmo || min_edit; }
};

struct ConsStats {
  std::uint64_t mover_sets = 0;
  std::uint64_t pruned_int_atomic = 0;
  std::uint64_t pruned_int_mvmo = 0;
  std::uint64_t target_assignments = 0;
  std::uint64_t pruned_min_edit = 0;
  std::uint64_t pruned_ext_atomic = 0;
  std::uint64_t pruned_ext_mvmo = 0;
  std::uint64_t couplings = 0;
  std::uint64_t completions = 0;
  std::uint64_t equal_imbalance = 0;
  std::uint64_t rejected_not_minimal = 0;
  std::uint64_t rejected_not_atomic = 0;
  std::uint64_t accepted = 0;
  std::uint64_t duplicates = 0;

  ConsStats& operator+=(const ConsStats& o);
};

struct ConsOptions {
  PruningOptions pruning;
  int threads = 1;
};

struct ConsResult {
  std::vector<Membership> neighbors;  // sorted
  ConsStats stats;
};

// All partitions with the imbalance of ps reachable from ps by an atomic
// operation of minimal cost exactly r.
ConsResult cons(const SignedGraph& g, const Membership& ps, int r, const ConsOptions& options = {});

// Sum of imbalance changes when exactly the movers in `subset` (indices into
// op.moving) go to their resolved targets.
int subset_delta(const SignedGraph& g, const Membership& ps, const EditOperation& op,
                 std::span<const int> subset);

// No proper non-empty sub-operation keeps the imbalance. Requires resolved targets.
bool is_atomic_exact(const SignedGraph& g, const Membership& ps, const EditOperation& op);

}  // namespace enumcc
