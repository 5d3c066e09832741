#include "enumcc/neighborhood.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "enumcc/editdist.hpp"
#include "enumcc/errors.hpp"
#include "enumcc/scenarios.hpp"

namespace enumcc {

namespace {

// Largest mover count for which all splits and sub-operations are scanned.
constexpr int kSubsetScanLimit = 12;

// Per-mover data of one operation: pairwise signs and labels.
struct Movers {
  int r = 0;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<int> sign;  // r x r
  mutable std::vector<int> potential;

  int a(int i, int j) const { return sign[i * r + j]; }
};

Movers view(const SignedGraph& g, const EditOperation& op) {
  Movers m;
  m.r = op.cost();
  m.source = op.source;
  m.target = op.target;
  m.sign.assign(static_cast<std::size_t>(m.r) * m.r, 0);
  for (int i = 0; i < m.r; ++i)
    for (int j = 0; j < m.r; ++j) m.sign[i * m.r + j] = g.sign(op.moving[i], op.moving[j]);
  return m;
}

void check_operation(const Membership& ps, const EditOperation& op) {
  if (op.source.size() != op.moving.size() || op.target.size() != op.moving.size())
    throw InputError("edit operation arrays differ in length");
  for (int i = 0; i < op.cost(); ++i) {
    if (op.moving[i] < 0 || op.moving[i] >= ps.size()) throw InputError("mover out of range");
    if (op.source[i] != ps[op.moving[i]]) throw InputError("mover source label disagrees with partition");
    if (op.target[i] == op.source[i]) throw InputError("mover target equals its source");
  }
}

// Coefficient c of a_xy in the pair interaction
//   c = [s_x=s_y] - [t_x=s_y] - [s_x=t_y] + [t_x=t_y],
// as a range over the completions consistent with what is known.
struct Range {
  int lo;
  int hi;
};

Range known_range(int sx, int tx, int sy, int ty) {
  int ss = sx == sy;
  bool ux = tx == kUnknownTarget, uy = ty == kUnknownTarget;
  if (ux && uy) return {ss, ss + 1};
  int tt = !ux && !uy && tx == ty;
  int ts = !ux && tx == sy;
  int st = !uy && ty == sx;
  int c = ss - ts - st + tt;
  return {c, c};
}

// Nothing known about targets beyond t != s.
Range free_range(int sx, int sy) { return sx == sy ? Range{1, 2} : Range{-2, 1}; }

int best_product(int a, Range c) { return a > 0 ? a * c.hi : a * c.lo; }

// potential[i][j] = largest possible a_ij * c_ij.
template <class RangeOf>
const std::vector<int>& potentials(const Movers& m, RangeOf&& range_of) {
  auto& p = m.potential;
  p.assign(static_cast<std::size_t>(m.r) * m.r, 0);
  for (int i = 0; i < m.r; ++i)
    for (int j = i + 1; j < m.r; ++j) {
      int a = m.a(i, j);
      if (a == 0) continue;
      int v = best_product(a, range_of(i, j));
      p[i * m.r + j] = p[j * m.r + i] = v;
    }
  return p;
}

// Sum of crossing potentials of the weakest split V1 | V2, or a large value
// when r is outside the scanned range.
int weakest_split(int r, const std::vector<int>& potential) {
  int weakest = std::numeric_limits<int>::max();
  if (r < 2 || r > kSubsetScanLimit) return weakest;
  unsigned full = (1u << r) - 1;
  for (unsigned mask = 1; mask < full; mask += 2) {
    int cross = 0;
    for (int i = 0; i < r; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (int j = 0; j < r; ++j)
        if (!(mask >> j & 1u)) cross += potential[i * r + j];
    }
    weakest = std::min(weakest, cross);
  }
  return weakest;
}

// A split whose crossing interaction can never be negative makes the
// operation either worse than ps or decomposable.
bool has_inert_split(int r, const std::vector<int>& potential) { return weakest_split(r, potential) <= 0; }

// Between two optima, an atomic operation raises the imbalance on each side
// of any split, so the crossing interaction must reach 2. Singleton sides
// give the per-vertex margin source_side - target_side >= 2.
bool margin_possible(int r, const std::vector<int>& potential) {
  for (int i = 0; i < r; ++i) {
    int total = 0;
    for (int j = 0; j < r; ++j) total += potential[i * r + j];
    if (total < 2) return false;
  }
  return weakest_split(r, potential) >= 2;
}

int exact_coefficient(int sx, int tx, int sy, int ty) {
  return (sx == sy) - (tx == sy) - (sx == ty) + (tx == ty);
}

// Exact pair correction C_ij = -a_ij c_ij, valid when both targets are resolved.
int pair_correction(const Movers& m, int i, int j) {
  int a = m.a(i, j);
  if (a == 0) return 0;
  return -a * exact_coefficient(m.source[i], m.target[i], m.source[j], m.target[j]);
}

bool min_edit_holds(const std::vector<int>& module_size, const Movers& m) {
  int ell = static_cast<int>(module_size.size());
  std::vector<int> leaving(ell, 0);
  for (int i = 0; i < m.r; ++i) leaving[m.source[i]]++;
  for (int i = 0; i < m.r; ++i) {
    int a = m.source[i], b = m.target[i];
    if (!is_resolved(b)) continue;
    int ab = 0, ba = 0;
    for (int j = 0; j < m.r; ++j) {
      if (m.source[j] == a && m.target[j] == b) ++ab;
      if (m.source[j] == b && m.target[j] == a) ++ba;
    }
    int stay_a = module_size[a] - leaving[a];
    int stay_b = b < ell ? module_size[b] - leaving[b] : 0;
    // Swapping labels a and b in the target saves ab + ba moves and costs
    // stay_a + stay_b new ones.
    if (ab + ba > stay_a + stay_b) return false;
  }
  return true;
}

// True when some non-empty proper sub-operation made of resolved movers keeps
// the imbalance, given exact single-move deltas.
bool resolved_subset_keeps_imbalance(const Movers& m, const std::vector<int>& single) {
  std::vector<int> idx;
  for (int i = 0; i < m.r; ++i)
    if (is_resolved(m.target[i])) idx.push_back(i);
  int k = static_cast<int>(idx.size());
  if (k == 0 || k > kSubsetScanLimit) return false;
  unsigned full = (1u << k) - 1;
  bool all_resolved = k == m.r;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (mask == full && all_resolved) continue;
    int delta = 0;
    for (int x = 0; x < k; ++x) {
      if (!(mask >> x & 1u)) continue;
      delta += single[idx[x]];
      for (int y = x + 1; y < k; ++y)
        if (mask >> y & 1u) delta += pair_correction(m, idx[x], idx[y]);
    }
    if (delta == 0) return true;
  }
  return false;
}

bool movers_connected(const Movers& m) {
  unsigned seen = 1, frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (int i = 0; i < m.r; ++i) {
      if (!(frontier >> i & 1u)) continue;
      for (int j = 0; j < m.r; ++j)
        if (m.a(i, j) != 0 && !(seen >> j & 1u)) next |= 1u << j;
    }
    seen |= next;
    frontier = next;
  }
  return seen == (m.r >= 32 ? ~0u : (1u << m.r) - 1);
}

int scan_single_delta(const SignedGraph& g, const Membership& ps, Vertex u, int target) {
  int own = 0, to = 0;
  for (const auto& nb : g.neighbors(u)) {
    if (ps[nb.v] == ps[u]) own += nb.sign;
    else if (ps[nb.v] == target) to += nb.sign;
  }
  return own - to;
}

std::array<int, 3> pair_signs3(const Movers& m) {
  std::array<int, 3> s{0, 0, 0};
  for (int x = 0; x < m.r; ++x)
    for (int y = x + 1; y < m.r; ++y) s[pair_slot(x, y)] = m.a(x, y);
  return s;
}

bool ext_atomic_core(const Movers& m, const std::vector<int>& single) {
  if (m.r < 2) return true;
  if (resolved_subset_keeps_imbalance(m, single)) return false;
  const auto& p = potentials(m, [&](int i, int j) {
    return known_range(m.source[i], m.target[i], m.source[j], m.target[j]);
  });
  return !has_inert_split(m.r, p);
}

bool ext_mvmo_core(const Movers& m) {
  if (m.r < 2) return true;
  const auto& p = potentials(m, [&](int i, int j) {
    return known_range(m.source[i], m.target[i], m.source[j], m.target[j]);
  });
  if (!margin_possible(m.r, p)) return false;
  if (m.r <= 3 && std::none_of(m.target.begin(), m.target.end(),
                               [](int t) { return t == kUnknownTarget; }))
    return scenario_admits(m.source, m.target, pair_signs3(m));
  return true;
}

bool int_atomic_core(const Movers& m) {
  if (!movers_connected(m)) return false;
  const auto& p = potentials(m, [&](int i, int j) { return free_range(m.source[i], m.source[j]); });
  return !has_inert_split(m.r, p);
}

bool int_mvmo_core(const Movers& m) {
  if (m.r < 2) return true;
  if (m.r <= 3) return scenario_admits_sources(m.source, pair_signs3(m));
  const auto& p = potentials(m, [&](int i, int j) { return free_range(m.source[i], m.source[j]); });
  return margin_possible(m.r, p);
}

Movers movers_of(const SignedGraph& g, const Membership& ps, std::span<const Vertex> moving) {
  EditOperation op;
  op.moving.assign(moving.begin(), moving.end());
  for (Vertex v : moving) {
    if (v < 0 || v >= ps.size()) throw InputError("mover out of range");
    op.source.push_back(ps[v]);
  }
  op.target.assign(moving.size(), kUnknownTarget);
  return view(g, op);
}

std::vector<int> single_deltas(const SignedGraph& g, const Membership& ps, const EditOperation& op) {
  std::vector<int> out(op.cost(), 0);
  for (int i = 0; i < op.cost(); ++i)
    if (is_resolved(op.target[i])) out[i] = scan_single_delta(g, ps, op.moving[i], op.target[i]);
  return out;
}

// ---------------------------------------------------------------------------

class ConsEngine {
 public:
  ConsEngine(const SignedGraph& g, const Membership& ps, int r, const PruningOptions& pruning)
      : g_(g), ps_(ps), r_(r), ell_(ps.num_modules()), pruning_(pruning),
        module_size_(ps.module_sizes()), toward_(static_cast<std::size_t>(g.n()) * ell_, 0) {
    for (Vertex u = 0; u < g.n(); ++u)
      for (const auto& nb : g.neighbors(u)) toward_[static_cast<std::size_t>(u) * ell_ + ps[nb.v]] += nb.sign;
    m_.r = r;
    m_.source.assign(r, 0);
    m_.target.assign(r, kUnknownTarget);
    m_.sign.assign(static_cast<std::size_t>(r) * r, 0);
    moving_.assign(r, 0);
    single_.assign(r, 0);
  }

  // Mover sets whose smallest vertex is congruent to `worker` modulo `workers`.
  void run(int worker, int workers) {
    std::vector<int> comb(r_);
    for (Vertex first = worker; first + r_ <= g_.n(); first += workers) {
      comb[0] = first;
      std::iota(comb.begin() + 1, comb.end(), first + 1);
      while (true) {
        visit(comb);
        int i = r_ - 1;
        while (i >= 1 && comb[i] == g_.n() - r_ + i) --i;
        if (i < 1) break;
        ++comb[i];
        for (int j = i + 1; j < r_; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
  }

  const ConsStats& stats() const { return stats_; }
  const std::unordered_set<Membership, MembershipHash>& found() const { return found_; }

 private:
  int single(int i, int t) const {
    Vertex u = moving_[i];
    const int* row = toward_.data() + static_cast<std::size_t>(u) * ell_;
    return row[m_.source[i]] - (t < ell_ ? row[t] : 0);
  }

  void visit(const std::vector<int>& comb) {
    stats_.mover_sets++;
    for (int i = 0; i < r_; ++i) {
      moving_[i] = comb[i];
      m_.source[i] = ps_[comb[i]];
      m_.target[i] = kUnknownTarget;
    }
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < r_; ++j) m_.sign[i * r_ + j] = g_.sign(comb[i], comb[j]);

    if (pruning_.int_atomic && !int_atomic_core(m_)) {
      stats_.pruned_int_atomic++;
      return;
    }
    if (pruning_.int_mvmo && !int_mvmo_core(m_)) {
      stats_.pruned_int_mvmo++;
      return;
    }
    sources_.clear();
    for (int i = 0; i < r_; ++i)
      if (std::find(sources_.begin(), sources_.end(), m_.source[i]) == sources_.end())
        sources_.push_back(m_.source[i]);
    std::sort(sources_.begin(), sources_.end());
    remaining_.clear();
    for (int l = 0; l < ell_; ++l)
      if (!std::binary_search(sources_.begin(), sources_.end(), l)) remaining_.push_back(l);
    group_of_.assign(r_, -1);
    assign_known(0);
  }

  void refresh_singles() {
    for (int i = 0; i < r_; ++i)
      single_[i] = is_resolved(m_.target[i]) ? single(i, m_.target[i]) : 0;
  }

  // External pruning on the current (possibly partial) targets.
  bool pruned() {
    if (!pruning_.min_edit && !pruning_.ext_atomic && !pruning_.ext_mvmo) return false;
    if (pruning_.min_edit && !min_edit_holds(module_size_, m_)) {
      stats_.pruned_min_edit++;
      return true;
    }
    if (pruning_.ext_atomic) {
      refresh_singles();
      if (!ext_atomic_core(m_, single_)) {
        stats_.pruned_ext_atomic++;
        return true;
      }
    }
    if (pruning_.ext_mvmo && !ext_mvmo_core(m_)) {
      stats_.pruned_ext_mvmo++;
      return true;
    }
    return false;
  }

  // Each mover gets another mover's source label or Unknown.
  void assign_known(int i) {
    if (i == r_) {
      stats_.target_assignments++;
      if (pruned()) return;
      unknown_.clear();
      for (int k = 0; k < r_; ++k)
        if (m_.target[k] == kUnknownTarget) unknown_.push_back(k);
      if (unknown_.empty()) finalize();
      else couple(0, 0);
      for (int k : unknown_) m_.target[k] = kUnknownTarget;
      return;
    }
    for (int label : sources_) {
      if (label == m_.source[i]) continue;
      m_.target[i] = label;
      assign_known(i + 1);
    }
    m_.target[i] = kUnknownTarget;
    assign_known(i + 1);
  }

  // Restricted-growth grouping of the Unknown movers into shared modules.
  void couple(int k, int groups) {
    if (k == static_cast<int>(unknown_.size())) {
      stats_.couplings++;
      if (pruned()) return;
      group_label_.assign(groups, -1);
      place(0, groups, 0);
      for (int x : unknown_) m_.target[x] = coupled_target(group_of_[x]);
      return;
    }
    for (int gidx = 0; gidx <= groups; ++gidx) {
      group_of_[unknown_[k]] = gidx;
      m_.target[unknown_[k]] = coupled_target(gidx);
      couple(k + 1, std::max(groups, gidx + 1));
    }
    m_.target[unknown_[k]] = kUnknownTarget;
  }

  // Each group goes to a distinct non-source module or a fresh one.
  void place(int gidx, int groups, int fresh) {
    if (gidx == groups) {
      for (int x : unknown_) m_.target[x] = group_label_[group_of_[x]];
      stats_.completions++;
      finalize();
      for (int x : unknown_) m_.target[x] = coupled_target(group_of_[x]);
      return;
    }
    for (int label : remaining_) {
      if (std::find(group_label_.begin(), group_label_.begin() + gidx, label) != group_label_.begin() + gidx)
        continue;
      group_label_[gidx] = label;
      place(gidx + 1, groups, fresh);
    }
    group_label_[gidx] = ell_ + fresh;
    place(gidx + 1, groups, fresh + 1);
  }

  void finalize() {
    int delta = 0;
    for (int i = 0; i < r_; ++i) {
      single_[i] = single(i, m_.target[i]);
      delta += single_[i];
      for (int j = i + 1; j < r_; ++j) delta += pair_correction(m_, i, j);
    }
    if (delta != 0) return;
    stats_.equal_imbalance++;
    if (pruned()) return;

    std::vector<int> pt = ps_.labels();
    for (int i = 0; i < r_; ++i) pt[moving_[i]] = m_.target[i];
    if (edit_distance(ps_.labels(), pt) != r_) {
      stats_.rejected_not_minimal++;
      return;
    }
    refresh_singles();
    if (resolved_subset_keeps_imbalance(m_, single_)) {
      stats_.rejected_not_atomic++;
      return;
    }
    if (found_.insert(Membership::from_labels(pt)).second) stats_.accepted++;
    else stats_.duplicates++;
  }

  const SignedGraph& g_;
  const Membership& ps_;
  int r_;
  int ell_;
  PruningOptions pruning_;
  std::vector<int> module_size_;
  std::vector<int> toward_;  // toward_[u * ell + l] = signed edge sum from u into module l

  Movers m_;
  VertexSet moving_;
  std::vector<int> single_;
  std::vector<int> sources_;
  std::vector<int> remaining_;
  std::vector<int> unknown_;
  std::vector<int> group_of_;
  std::vector<int> group_label_;

  ConsStats stats_;
  std::unordered_set<Membership, MembershipHash> found_;
};

}  // namespace

bool EditOperation::resolved() const {
  return std::all_of(target.begin(), target.end(), [](int t) { return is_resolved(t); });
}

EditOperation EditOperation::between(const Membership& ps, std::span<const int> pt_aligned) {
  if (static_cast<int>(pt_aligned.size()) != ps.size()) throw InputError("membership vectors differ in length");
  EditOperation op;
  for (int u = 0; u < ps.size(); ++u)
    if (ps[u] != pt_aligned[u]) {
      op.moving.push_back(u);
      op.source.push_back(ps[u]);
      op.target.push_back(pt_aligned[u]);
    }
  return op;
}

std::vector<int> apply(const Membership& ps, const EditOperation& op) {
  if (!op.resolved()) throw InputError("cannot apply an operation with unresolved targets");
  std::vector<int> out = ps.labels();
  for (int i = 0; i < op.cost(); ++i) out[op.moving[i]] = op.target[i];
  return out;
}

bool InteractionGraph::connected() const {
  if (vertices.size() <= 1) return true;
  std::vector<int> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
  };
  std::size_t merged = 0;
  for (auto [u, v] : edges) {
    int a = find(index(u)), b = find(index(v));
    if (a != b) {
      parent[a] = b;
      ++merged;
    }
  }
  return merged + 1 == vertices.size();
}

InteractionGraph interaction_graph(const SignedGraph& g, const EditOperation& op) {
  InteractionGraph ig;
  std::vector<int> order(op.cost());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return op.moving[a] < op.moving[b]; });
  for (int i : order) ig.vertices.push_back(op.moving[i]);
  auto same = [](int x, int y) { return x == y && x != kUnknownTarget; };
  for (int x = 0; x < op.cost(); ++x)
    for (int y = x + 1; y < op.cost(); ++y) {
      int i = order[x], j = order[y];
      if (g.sign(op.moving[i], op.moving[j]) == 0) continue;
      bool related = op.source[i] == op.source[j] || same(op.target[i], op.source[j]) ||
                     same(op.source[i], op.target[j]) || same(op.target[i], op.target[j]);
      if (related) ig.edges.emplace_back(op.moving[i], op.moving[j]);
    }
  return ig;
}

bool is_min_edit(const Membership& ps, const EditOperation& op) {
  check_operation(ps, op);
  Movers m;
  m.r = op.cost();
  m.source = op.source;
  m.target = op.target;
  return min_edit_holds(ps.module_sizes(), m);
}

bool int_atomic(const SignedGraph& g, const Membership& ps, std::span<const Vertex> moving) {
  if (moving.empty()) throw InputError("empty mover set");
  Movers m = movers_of(g, ps, moving);
  if (moving.size() >= 32) return is_connected(g, moving);
  return int_atomic_core(m);
}

bool ext_atomic(const SignedGraph& g, const Membership& ps, const EditOperation& op) {
  check_operation(ps, op);
  if (!is_min_edit(ps, op)) return false;
  return ext_atomic_core(view(g, op), single_deltas(g, ps, op));
}

MvmoTerms mvmo_terms(const SignedGraph& g, const EditOperation& op, Vertex u) {
  auto it = std::find(op.moving.begin(), op.moving.end(), u);
  if (it == op.moving.end()) throw InputError("vertex " + std::to_string(u) + " is not moving");
  int i = static_cast<int>(it - op.moving.begin());
  auto eq = [](int x, int y) { return x == y && x != kUnknownTarget; };
  MvmoTerms terms;
  for (int j = 0; j < op.cost(); ++j) {
    if (j == i) continue;
    int a = g.sign(u, op.moving[j]);
    if (a == 0) continue;
    terms.source_side += a * ((op.source[j] == op.source[i]) - eq(op.source[j], op.target[i]));
    terms.target_side += a * (eq(op.target[j], op.source[i]) - eq(op.target[j], op.target[i]));
  }
  return terms;
}

bool int_mvmo(const SignedGraph& g, const Membership& ps, std::span<const Vertex> moving) {
  if (moving.empty()) throw InputError("empty mover set");
  return int_mvmo_core(movers_of(g, ps, moving));
}

bool ext_mvmo(const SignedGraph& g, const Membership& ps, const EditOperation& op) {
  check_operation(ps, op);
  return ext_mvmo_core(view(g, op));
}

int subset_delta(const SignedGraph& g, const Membership& ps, const EditOperation& op,
                 std::span<const int> subset) {
  check_operation(ps, op);
  Movers m = view(g, op);
  int delta = 0;
  for (std::size_t x = 0; x < subset.size(); ++x) {
    int i = subset[x];
    if (!is_resolved(op.target[i])) throw InputError("subset contains an unresolved mover");
    delta += scan_single_delta(g, ps, op.moving[i], op.target[i]);
    for (std::size_t y = x + 1; y < subset.size(); ++y) delta += pair_correction(m, i, subset[y]);
  }
  return delta;
}

bool is_atomic_exact(const SignedGraph& g, const Membership& ps, const EditOperation& op) {
  check_operation(ps, op);
  if (!op.resolved()) throw InputError("atomicity needs resolved targets");
  return !resolved_subset_keeps_imbalance(view(g, op), single_deltas(g, ps, op));
}

ConsStats& ConsStats::operator+=(const ConsStats& o) {
  mover_sets += o.mover_sets;
  pruned_int_atomic += o.pruned_int_atomic;
  pruned_int_mvmo += o.pruned_int_mvmo;
  target_assignments += o.target_assignments;
  pruned_min_edit += o.pruned_min_edit;
  pruned_ext_atomic += o.pruned_ext_atomic;
  pruned_ext_mvmo += o.pruned_ext_mvmo;
  couplings += o.couplings;
  completions += o.completions;
  equal_imbalance += o.equal_imbalance;
  rejected_not_minimal += o.rejected_not_minimal;
  rejected_not_atomic += o.rejected_not_atomic;
  accepted += o.accepted;
  duplicates += o.duplicates;
  return *this;
}

ConsResult cons(const SignedGraph& g, const Membership& ps, int r, const ConsOptions& options) {
  if (ps.size() != g.n()) throw InputError("membership length does not match graph order");
  if (r < 1) throw InputError("edit cost r must be at least 1");
  if (r >= g.n()) throw InputError("edit cost r must be smaller than the number of vertices");
  int workers = std::max(1, options.threads);
  std::vector<ConsEngine> engines;
  engines.reserve(workers);
  for (int w = 0; w < workers; ++w) engines.emplace_back(g, ps, r, options.pruning);
  if (workers == 1) {
    engines[0].run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back([&engines, w, workers] { engines[w].run(w, workers); });
  }
  ConsResult result;
  std::unordered_set<Membership, MembershipHash> merged;
  for (auto& e : engines) {
    result.stats += e.stats();
    for (const auto& p : e.found())
      if (!merged.insert(p).second) {
        result.stats.accepted--;
        result.stats.duplicates++;
      }
  }
  result.neighbors.assign(merged.begin(), merged.end());
  std::sort(result.neighbors.begin(), result.neighbors.end());
  return result;
}

}  // namespace enumcc
