#include "enumcc/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "enumcc/editdist.hpp"
#include "enumcc/errors.hpp"

namespace enumcc {

std::uint64_t bell_number(int n) {
  if (n < 0) throw InputError("negative size");
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) {
      if (next.back() > std::numeric_limits<std::uint64_t>::max() - v)
        return std::numeric_limits<std::uint64_t>::max();
      next.push_back(next.back() + v);
    }
    row = std::move(next);
  }
  return row.front();
}

PartitionStream::PartitionStream(int n, const OracleLimit& limit) : n_(n) {
  if (n < 0) throw InputError("negative size");
  if (n > limit.max_n)
    throw CapExceeded("partition enumeration for n=" + std::to_string(n) + " exceeds max_n=" +
                      std::to_string(limit.max_n));
  if (bell_number(n) > limit.max_partitions)
    throw CapExceeded("Bell(" + std::to_string(n) + ") exceeds the partition cap");
  labels_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

void PartitionStream::next() {
  if (done_) return;
  for (int i = n_ - 1; i >= 1; --i) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (int j = i + 1; j < n_; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return;
    }
  }
  done_ = true;
}

std::vector<Membership> enumerate_partitions(int n, const OracleLimit& limit) {
  std::vector<Membership> out;
  for (PartitionStream s(n, limit); !s.done(); s.next()) out.push_back(s.current());
  return out;
}

SolutionSet oracle_optima(const SignedGraph& g, const OracleLimit& limit) {
  int best = std::numeric_limits<int>::max();
  std::vector<std::vector<int>> optima;
  for (PartitionStream s(g.n(), limit); !s.done(); s.next()) {
    int value = imbalance(g, s.labels());
    if (value < best) {
      best = value;
      optima.clear();
    }
    if (value == best) optima.push_back(s.labels());
  }
  SolutionSet out(best);
  for (auto& labels : optima) out.insert(Membership::from_canonical(std::move(labels)));
  return out;
}

std::vector<Membership> cons_bruteforce(const SignedGraph& g, const Membership& ps, int r) {
  if (ps.size() != g.n()) throw InputError("membership length does not match graph order");
  if (r < 1 || r >= g.n()) throw InputError("edit cost r out of range");
  const int n = g.n(), ell = ps.num_modules();
  const int base = imbalance(g, ps);
  std::set<Membership> found;
  std::vector<int> movers(r);
  std::iota(movers.begin(), movers.end(), 0);
  std::vector<int> target(r);

  auto atomic = [&](const std::vector<int>& labels_after) {
    for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
      std::vector<int> mid = ps.labels();
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1u) mid[movers[i]] = labels_after[movers[i]];
      if (imbalance(g, mid) == base) return false;
    }
    return true;
  };

  // target[i] in [0, ell + r); labels >= ell are fresh and used in order.
  auto visit_targets = [&](auto&& self, int i, int fresh) -> void {
    if (i == r) {
      std::vector<int> pt = ps.labels();
      for (int k = 0; k < r; ++k) pt[movers[k]] = target[k];
      if (imbalance(g, pt) != base) return;
      if (edit_distance(ps.labels(), pt) != r) return;
      if (!atomic(pt)) return;
      found.insert(Membership::from_labels(pt));
      return;
    }
    for (int t = 0; t < ell + fresh + 1; ++t) {
      if (t == ps[movers[i]]) continue;
      target[i] = t;
      self(self, i + 1, t == ell + fresh ? fresh + 1 : fresh);
    }
  };

  while (true) {
    visit_targets(visit_targets, 0, 0);
    int i = r - 1;
    while (i >= 0 && movers[i] == n - r + i) --i;
    if (i < 0) break;
    ++movers[i];
    for (int j = i + 1; j < r; ++j) movers[j] = movers[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace enumcc
