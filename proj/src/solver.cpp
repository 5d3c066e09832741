#include "enumcc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "enumcc/errors.hpp"

namespace enumcc {

std::size_t RelationVector::index(Vertex u, Vertex v) const {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("invalid vertex pair");
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

RelationVector to_relations(const Membership& p) {
  RelationVector x(p.size());
  for (int u = 0; u < p.size(); ++u)
    for (int v = u + 1; v < p.size(); ++v) x.set(u, v, p[u] == p[v]);
  return x;
}

std::vector<std::array<Vertex, 3>> check_triangle(const RelationVector& x) {
  std::vector<std::array<Vertex, 3>> bad;
  int n = x.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (x.get(i, j) + x.get(j, k) + x.get(i, k) == 2) bad.push_back({i, j, k});
  return bad;
}

int eval_objective(const SignedGraph& g, const RelationVector& x) {
  if (x.n() != g.n()) throw InputError("relation vector size does not match graph order");
  if (!check_triangle(x).empty()) throw InputError("relation vector is not transitive");
  int total = 0;
  for (const auto& e : g.edges()) total += e.sign < 0 ? x.get(e.u, e.v) : 1 - x.get(e.u, e.v);
  return total;
}

bool check_two_partition(const RelationVector& x, std::span<const Vertex> s, std::span<const Vertex> t) {
  if (s.empty() || t.empty()) throw InputError("2-partition sides must be non-empty");
  std::vector<char> mark(x.n(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= x.n() || mark[v]) throw InputError("invalid or repeated vertex in s");
    mark[v] = 1;
  }
  for (Vertex v : t) {
    if (v < 0 || v >= x.n()) throw InputError("vertex out of range in t");
    if (mark[v]) throw InputError("2-partition sides overlap");
    mark[v] = 2;
  }
  auto inside = [&](std::span<const Vertex> side) {
    int total = 0;
    for (std::size_t i = 0; i < side.size(); ++i)
      for (std::size_t j = i + 1; j < side.size(); ++j) total += x.get(side[i], side[j]);
    return total;
  };
  int cross = 0;
  for (Vertex u : s)
    for (Vertex v : t) cross += x.get(u, v);
  int lhs = cross - inside(s) - inside(t);
  return lhs <= static_cast<int>(std::min(s.size(), t.size()));
}

bool check_two_chorded_cycle(const RelationVector& x, std::span<const Vertex> cycle) {
  int k = static_cast<int>(cycle.size());
  if (k < 5 || k % 2 == 0) throw InputError("2-chorded cycle needs an odd length of at least 5");
  std::vector<char> mark(x.n(), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= x.n() || mark[v]) throw InputError("invalid or repeated cycle vertex");
    mark[v] = 1;
  }
  int on_cycle = 0, chords = 0;
  for (int i = 0; i < k; ++i) on_cycle += x.get(cycle[i], cycle[(i + 1) % k]);
  for (int i = 0; i + 2 < k; ++i) chords += x.get(cycle[i], cycle[i + 2]);
  chords += x.get(cycle[0], cycle[k - 2]);
  chords += x.get(cycle[1], cycle[k - 1]);
  return on_cycle - chords <= k / 2;
}

std::vector<Vertex> branching_order(const SignedGraph& g) {
  std::vector<int> key(g.n(), 0);
  for (Vertex u = 0; u < g.n(); ++u)
    for (const auto& nb : g.neighbors(u)) key[u] += nb.sign;
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return std::abs(key[a]) > std::abs(key[b]); });
  return order;
}

Membership greedy_partition(const SignedGraph& g) {
  if (g.n() == 0) return {};
  auto improve = [&](std::vector<int> labels) {
    Membership p = Membership::from_labels(labels);
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex u = 0; u < g.n(); ++u) {
        int best_delta = 0, best_target = -1;
        for (int t = 0; t <= p.num_modules(); ++t) {
          if (t == p[u]) continue;
          if (t == p.num_modules() && p.module_sizes()[p[u]] == 1) continue;
          int d = move_delta(g, p, u, t);
          if (d < best_delta) {
            best_delta = d;
            best_target = t;
          }
        }
        if (best_target >= 0) {
          std::vector<int> next = p.labels();
          next[u] = best_target;
          p = Membership::from_labels(next);
          changed = true;
        }
      }
    }
    return p;
  };
  std::vector<Membership> starts;
  starts.push_back(improve(connected_components(positive_graph(g))));
  starts.push_back(improve(std::vector<int>(g.n(), 0)));
  std::vector<int> singletons(g.n());
  std::iota(singletons.begin(), singletons.end(), 0);
  starts.push_back(improve(singletons));
  return *std::min_element(starts.begin(), starts.end(), [&](const Membership& a, const Membership& b) {
    int ia = imbalance(g, a), ib = imbalance(g, b);
    return ia != ib ? ia < ib : a < b;
  });
}

namespace {

struct BudgetExhausted {};

// Depth-first assignment of vertices in branching order with restricted-growth
// labels. Nodes whose bound exceeds `limit` are cut.
class Search {
 public:
  Search(const SignedGraph& g, const SolverBudget& budget)
      : g_(g), n_(g.n()), budget_(budget), start_(std::chrono::steady_clock::now()) {
    order_ = branching_order(g);
    pos_.assign(n_, 0);
    for (int k = 0; k < n_; ++k) pos_[order_[k]] = k;
    fwd_.assign(n_, {});
    for (int k = 0; k < n_; ++k)
      for (const auto& nb : g.neighbors(order_[k]))
        if (pos_[nb.v] > k) fwd_[k].push_back({pos_[nb.v], nb.sign});
    label_.assign(n_, -1);
    pos_back_.assign(n_, 0);
    score_.assign(static_cast<std::size_t>(n_) * (n_ + 1), 0);
    triangle_bound_ = suffix_triangle_bounds();
  }

  const std::vector<Vertex>& order() const { return order_; }
  std::uint64_t nodes() const { return nodes_; }

  // Returns false when the callback asked to stop.
  bool run(int limit, const std::function<bool(int)>& leaf) {
    limit_ = limit;
    leaf_ = &leaf;
    return dfs(0, 0, 0);
  }

  void set_limit(int limit) { limit_ = limit; }

  Membership current() const {
    std::vector<int> labels(n_);
    for (int k = 0; k < n_; ++k) labels[order_[k]] = label_[k];
    return Membership::from_labels(labels);
  }

  // Applies a prefix and returns the node bound without searching.
  int bound_for_prefix(std::span<const int> prefix) {
    int used = 0, cost = 0;
    for (int k = 0; k < static_cast<int>(prefix.size()); ++k) {
      int l = prefix[k];
      if (l < 0 || l > used) throw InputError("prefix labels are not in restricted-growth form");
      cost += cost_of(k, l, used);
      assign(k, l);
      used = std::max(used, l + 1);
    }
    int k = static_cast<int>(prefix.size());
    int bound = cost + dynamic_bound(k, used) + triangle_bound_[k];
    for (int j = k - 1; j >= 0; --j) unassign(j);
    return bound;
  }

 private:
  struct Forward {
    int pos;
    int sign;
  };

  int& score(int pos, int label) { return score_[static_cast<std::size_t>(pos) * (n_ + 1) + label]; }

  int cost_of(int k, int label, int used) {
    return pos_back_[k] - (label < used ? score(k, label) : 0);
  }

  void assign(int k, int label) {
    label_[k] = label;
    for (const auto& f : fwd_[k]) {
      score(f.pos, label) += f.sign;
      if (f.sign > 0) pos_back_[f.pos]++;
    }
  }

  void unassign(int k) {
    int label = label_[k];
    for (const auto& f : fwd_[k]) {
      score(f.pos, label) -= f.sign;
      if (f.sign > 0) pos_back_[f.pos]--;
    }
    label_[k] = -1;
  }

  // Each unassigned vertex pays at least its cheapest choice against the prefix.
  int dynamic_bound(int k, int used) {
    int total = 0;
    for (int j = k; j < n_; ++j) {
      int best = 0;
      for (int l = 0; l < used; ++l) best = std::max(best, score(j, l));
      total += pos_back_[j] - best;
    }
    return total;
  }

  // Greedy packing of edge-disjoint triangles with exactly one negative edge
  // inside order[k..n-1]; every partition frustrates one edge of each.
  std::vector<int> suffix_triangle_bounds() {
    std::vector<int> bound(n_ + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n_) * n_, 0);
    auto sgn = [&](int a, int b) { return g_.sign(order_[a], order_[b]); };
    for (int k = 0; k + 3 <= n_; ++k) {
      std::fill(used.begin(), used.end(), 0);
      int packed = 0;
      for (int a = k; a < n_; ++a)
        for (const auto& fb : fwd_[a]) {
          int b = fb.pos;
          if (used[a * n_ + b]) continue;
          for (const auto& fc : fwd_[b]) {
            int c = fc.pos;
            int ac = sgn(a, c);
            if (ac == 0 || used[b * n_ + c] || used[a * n_ + c]) continue;
            if (fb.sign + fc.sign + ac != 1) continue;
            used[a * n_ + b] = used[b * n_ + c] = used[a * n_ + c] = 1;
            ++packed;
            break;
          }
        }
      bound[k] = packed;
    }
    return bound;
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{};
    if ((nodes_ & 1023) == 0 && budget_.seconds < std::numeric_limits<double>::infinity()) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > budget_.seconds) throw BudgetExhausted{};
    }
  }

  bool dfs(int k, int used, int cost) {
    tick();
    if (k == n_) return (*leaf_)(cost);
    int choices = std::min(used + 1, n_);
    std::vector<std::pair<int, int>> options;
    options.reserve(choices);
    for (int l = 0; l < choices; ++l) options.push_back({cost_of(k, l, used), l});
    std::sort(options.begin(), options.end());
    for (auto [c, l] : options) {
      int next_used = std::max(used, l + 1);
      assign(k, l);
      int bound = cost + c + dynamic_bound(k + 1, next_used) + triangle_bound_[k + 1];
      bool keep_going = true;
      if (bound <= limit_) keep_going = dfs(k + 1, next_used, cost + c);
      unassign(k);
      if (!keep_going) return false;
    }
    return true;
  }

  const SignedGraph& g_;
  int n_;
  SolverBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Vertex> order_;
  std::vector<int> pos_;
  std::vector<std::vector<Forward>> fwd_;
  std::vector<int> label_;
  std::vector<int> pos_back_;  // positive edges from each vertex back into the prefix
  std::vector<int> score_;     // signed edge sum from each vertex into each prefix label
  std::vector<int> triangle_bound_;
  std::uint64_t nodes_ = 0;
  int limit_ = 0;
  const std::function<bool(int)>* leaf_ = nullptr;
};

}  // namespace

SolveResult solve_first(const SignedGraph& g, const SolverBudget& budget) {
  if (g.n() < 1) throw InputError("graph has no vertices");
  Membership best = greedy_partition(g);
  int best_value = imbalance(g, best);
  Search search(g, budget);
  try {
    std::function<bool(int)> leaf = [&](int value) {
      if (value < best_value) {
        best_value = value;
        best = search.current();
        search.set_limit(best_value - 1);
      }
      return true;
    };
    search.run(best_value - 1, leaf);
  } catch (const BudgetExhausted&) {
    throw SolverTimeout("solver budget exhausted before optimality was proven", best, best_value);
  }
  return {best, best_value, search.nodes()};
}

JumpResult jump(const SignedGraph& g, const SolutionSet& s, int istar, const SolverBudget& budget) {
  if (g.n() < 1) throw InputError("graph has no vertices");
  JumpResult result;
  Search search(g, budget);
  try {
    std::function<bool(int)> leaf = [&](int value) {
      if (value != istar) return true;
      Membership p = search.current();
      if (s.contains(p)) return true;
      result.partition = std::move(p);
      return false;
    };
    search.run(istar, leaf);
  } catch (const BudgetExhausted&) {
    throw SolverTimeout("solver budget exhausted during jump", std::nullopt, istar);
  }
  result.nodes = search.nodes();
  return result;
}

int completion_lower_bound(const SignedGraph& g, std::span<const Vertex> order, std::span<const int> prefix) {
  Search search(g, {});
  if (!std::equal(order.begin(), order.end(), search.order().begin(), search.order().end()))
    throw InputError("order must be the solver's branching order");
  if (prefix.size() > order.size()) throw InputError("prefix longer than the vertex count");
  return search.bound_for_prefix(prefix);
}

}  // namespace enumcc
