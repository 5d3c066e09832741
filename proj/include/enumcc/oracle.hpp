#pragma once

#include <cstdint>
#include <vector>

#include "enumcc/graph.hpp"
#include "enumcc/partition.hpp"
#include "enumcc/solution_set.hpp"

namespace enumcc {

struct OracleLimit {
  int max_n = 12;
  std::uint64_t max_partitions = 4'213'597;  // Bell(12)
};

std::uint64_t bell_number(int n);

// Streams every restricted-growth string of length n in lexicographic order.
class PartitionStream {
 public:
  explicit PartitionStream(int n, const OracleLimit& limit = {});

  // Current partition as raw canonical labels.
  const std::vector<int>& labels() const { return labels_; }
  Membership current() const { return Membership::from_canonical(labels_); }
  bool done() const { return done_; }
  void next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;  // prefix_max_[i] = max(labels_[0..i])
};

std::vector<Membership> enumerate_partitions(int n, const OracleLimit& limit = {});

SolutionSet oracle_optima(const SignedGraph& g, const OracleLimit& limit = {});

// Every min-r-edit neighbor of ps with the same imbalance reached by an atomic
// operation, found without any pruning: each r-subset is sent to every label
// combination, and each candidate is checked by full recomputation.
std::vector<Membership> cons_bruteforce(const SignedGraph& g, const Membership& ps, int r);

}  // namespace enumcc
