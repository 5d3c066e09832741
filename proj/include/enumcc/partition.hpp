#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "enumcc/graph.hpp"

namespace enumcc {

// A partition of 0..n-1 stored as a restricted-growth label vector: the first
// occurrence of each label is the smallest label not used so far.
class Membership {
 public:
  Membership() = default;

  // Any non-negative labels; the result is relabeled by first occurrence.
  static Membership from_labels(std::span<const int> labels);
  // Throws InputError unless labels already form a restricted-growth string.
  static Membership from_canonical(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_modules() const { return num_modules_; }
  int operator[](Vertex u) const { return labels_[u]; }
  const std::vector<int>& labels() const { return labels_; }
  std::vector<VertexSet> modules() const;
  std::vector<int> module_sizes() const;

  friend bool operator==(const Membership& a, const Membership& b) {
    return a.labels_ == b.labels_;
  }
  friend auto operator<=>(const Membership& a, const Membership& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<int> labels_;
  int num_modules_ = 0;
};

struct MembershipHash {
  std::size_t operator()(const Membership& p) const noexcept;
  std::size_t operator()(std::span<const int> labels) const noexcept;
};

Membership canonicalize(std::span<const int> labels);
inline Membership canonicalize(const Membership& p) { return p; }

// Comma-separated labels, e.g. "0,0,1".
std::string to_string(const Membership& p);
// Inverse of to_string; accepts any non-negative labels and canonicalizes.
Membership parse_membership(const std::string& line);

struct FrustrationReport {
  int imbalance = 0;
  std::vector<SignedEdge> frustrated_edges;
};

// Number of positive edges between modules plus negative edges inside modules.
int imbalance(const SignedGraph& g, std::span<const int> labels);
inline int imbalance(const SignedGraph& g, const Membership& p) { return imbalance(g, p.labels()); }

FrustrationReport frustration_report(const SignedGraph& g, const Membership& p);

// Change of imbalance when u moves to `target`; target == p.num_modules()
// opens a new singleton module. O(deg(u)).
int move_delta(const SignedGraph& g, const Membership& p, Vertex u, int target);

}  // namespace enumcc
