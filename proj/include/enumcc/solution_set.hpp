#pragma once

#include <unordered_set>
#include <vector>

#include "enumcc/partition.hpp"

namespace enumcc {

// Deduplicated set of canonical partitions sharing one imbalance value.
class SolutionSet {
 public:
  SolutionSet() = default;
  explicit SolutionSet(int istar) : istar_(istar) {}

  int istar() const { return istar_; }
  void set_istar(int istar) { istar_ = istar; }
  std::size_t size() const { return index_.size(); }
  bool empty() const { return index_.empty(); }
  bool contains(const Membership& p) const { return index_.count(p) > 0; }

  // Returns false when p was already present.
  bool insert(const Membership& p) { return index_.insert(p).second; }

  std::vector<Membership> sorted() const;

  friend bool operator==(const SolutionSet& a, const SolutionSet& b) {
    return a.istar_ == b.istar_ && a.index_ == b.index_;
  }

 private:
  int istar_ = 0;
  std::unordered_set<Membership, MembershipHash> index_;
};

}  // namespace enumcc
