#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "enumcc/neighborhood.hpp"
#include "enumcc/solution_set.hpp"

namespace enumcc {

struct RnsStats {
  std::vector<std::uint64_t> found_per_level;  // index r-1: new partitions first seen via cons(r)
  std::uint64_t cons_calls = 0;
  std::uint64_t duplicates = 0;
  ConsStats cons;
};

struct RnsResult {
  SolutionSet discovered;
  RnsStats stats;
  bool stopped = false;  // the stop predicate fired before the fixed point
};

struct RnsOptions {
  ConsOptions cons;
  // Polled between cons calls; returning true stops the search.
  std::function<bool(const SolutionSet&)> stop;
};

// Closure of {p} under cons(., r) for r = 1..r_max, processed first in, first out.
RnsResult rns(const SignedGraph& g, const Membership& p, int r_max, const RnsOptions& options = {});

// Same closure, merging into an existing set: partitions already in `known`
// are neither re-expanded nor reported as new. Returns the new partitions.
RnsResult rns_into(const SignedGraph& g, const Membership& p, int r_max, SolutionSet& known,
                   const RnsOptions& options = {});

}  // namespace enumcc
