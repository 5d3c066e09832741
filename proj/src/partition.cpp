#include "enumcc/partition.hpp"

#include <charconv>
#include <unordered_map>

#include "enumcc/errors.hpp"

namespace enumcc {

Membership Membership::from_labels(std::span<const int> labels) {
  Membership p;
  p.labels_.resize(labels.size());
  std::unordered_map<int, int> rename;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] < 0) throw InputError("negative module label at vertex " + std::to_string(u));
    auto [it, fresh] = rename.try_emplace(labels[u], p.num_modules_);
    if (fresh) ++p.num_modules_;
    p.labels_[u] = it->second;
  }
  return p;
}

Membership Membership::from_canonical(std::vector<int> labels) {
  Membership p;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] < 0 || labels[u] > p.num_modules_)
      throw InputError("labels are not in restricted-growth form at vertex " + std::to_string(u));
    if (labels[u] == p.num_modules_) ++p.num_modules_;
  }
  p.labels_ = std::move(labels);
  return p;
}

std::vector<VertexSet> Membership::modules() const {
  std::vector<VertexSet> out(num_modules_);
  for (int u = 0; u < size(); ++u) out[labels_[u]].push_back(u);
  return out;
}

std::vector<int> Membership::module_sizes() const {
  std::vector<int> out(num_modules_, 0);
  for (int l : labels_) out[l]++;
  return out;
}

std::size_t MembershipHash::operator()(std::span<const int> labels) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int l : labels) {
    h ^= static_cast<std::uint64_t>(l) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t MembershipHash::operator()(const Membership& p) const noexcept {
  return (*this)(std::span<const int>(p.labels()));
}

Membership canonicalize(std::span<const int> labels) { return Membership::from_labels(labels); }

std::string to_string(const Membership& p) {
  std::string out;
  for (int u = 0; u < p.size(); ++u) {
    if (u) out += ',';
    out += std::to_string(p[u]);
  }
  return out;
}

Membership parse_membership(const std::string& line) {
  std::vector<int> labels;
  const char* pos = line.data();
  const char* end = line.data() + line.size();
  while (end > pos && (end[-1] == '\r' || end[-1] == ' ' || end[-1] == '\n')) --end;
  if (pos == end) return Membership();
  while (true) {
    while (pos < end && *pos == ' ') ++pos;
    int value = 0;
    auto [next, ec] = std::from_chars(pos, end, value);
    if (ec != std::errc()) throw InputError("bad module label in '" + line + "'");
    labels.push_back(value);
    pos = next;
    while (pos < end && *pos == ' ') ++pos;
    if (pos == end) break;
    if (*pos != ',') throw InputError("expected ',' in '" + line + "'");
    ++pos;
  }
  return Membership::from_labels(labels);
}

int imbalance(const SignedGraph& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.n())
    throw InputError("membership length " + std::to_string(labels.size()) +
                     " does not match graph order " + std::to_string(g.n()));
  int total = 0;
  for (const auto& e : g.edges()) {
    bool same = labels[e.u] == labels[e.v];
    total += (e.sign > 0) != same;
  }
  return total;
}

FrustrationReport frustration_report(const SignedGraph& g, const Membership& p) {
  if (p.size() != g.n()) throw InputError("membership length does not match graph order");
  FrustrationReport report;
  for (const auto& e : g.edges()) {
    bool same = p[e.u] == p[e.v];
    if ((e.sign > 0) != same) report.frustrated_edges.push_back(e);
  }
  report.imbalance = static_cast<int>(report.frustrated_edges.size());
  return report;
}

int move_delta(const SignedGraph& g, const Membership& p, Vertex u, int target) {
  if (p.size() != g.n()) throw InputError("membership length does not match graph order");
  if (u < 0 || u >= g.n()) throw InputError("vertex id out of range");
  if (target < 0 || target > p.num_modules()) throw InputError("target label out of range");
  if (target == p[u]) throw InputError("target label equals the current label");
  int to_source = 0, to_target = 0;
  for (const auto& nb : g.neighbors(u)) {
    if (p[nb.v] == p[u]) to_source += nb.sign;
    else if (p[nb.v] == target) to_target += nb.sign;
  }
  return to_source - to_target;
}

}  // namespace enumcc
