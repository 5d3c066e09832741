#include "enumcc/graph.hpp"

#include <algorithm>
#include <string>

#include "enumcc/errors.hpp"

namespace enumcc {

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges, AdjacencyStorage storage)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") out of range");
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.sign != 1 && e.sign != -1)
      throw InputError("edge sign must be +1 or -1, got " + std::to_string(e.sign));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw InputError("duplicate edge (" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + ")");

  bool use_dense = storage == AdjacencyStorage::dense ||
                   (storage == AdjacencyStorage::automatic && n <= kDenseLimit);
  if (use_dense && n > 0) matrix_.assign(static_cast<std::size_t>(n) * n, 0);

  std::vector<int> deg(n, 0);
  for (const auto& e : edges_) {
    (e.sign > 0 ? m_pos_ : m_neg_)++;
    deg[e.u]++;
    deg[e.v]++;
    if (use_dense) {
      matrix_[static_cast<std::size_t>(e.u) * n + e.v] = static_cast<std::int8_t>(e.sign);
      matrix_[static_cast<std::size_t>(e.v) * n + e.u] = static_cast<std::int8_t>(e.sign);
    } else {
      map_.emplace(key(e.u, e.v), static_cast<std::int8_t>(e.sign));
    }
  }
  offset_.assign(n + 1, 0);
  for (int u = 0; u < n; ++u) offset_[u + 1] = offset_[u] + deg[u];
  adj_.resize(offset_[n]);
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  // Edges are sorted, so each adjacency list comes out sorted by neighbor id.
  for (const auto& e : edges_) adj_[fill[e.u]++] = {e.v, e.sign};
  for (const auto& e : edges_) adj_[fill[e.v]++] = {e.u, e.sign};
  for (int u = 0; u < n; ++u)
    std::sort(adj_.begin() + offset_[u], adj_.begin() + offset_[u + 1],
              [](const Neighbor& a, const Neighbor& b) { return a.v < b.v; });
}

void check_vertex_set(const SignedGraph& g, std::span<const Vertex> s) {
  std::vector<char> seen(g.n(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= g.n()) throw InputError("vertex id " + std::to_string(v) + " out of range");
    if (seen[v]) throw InputError("vertex id " + std::to_string(v) + " repeated");
    seen[v] = 1;
  }
}

int sign_sum(const SignedGraph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  check_vertex_set(g, a);
  check_vertex_set(g, b);
  std::vector<char> in_a(g.n(), 0), in_b(g.n(), 0);
  for (Vertex v : a) in_a[v] = 1;
  for (Vertex v : b) in_b[v] = 1;
  int total = 0;
  for (Vertex u : a)
    for (const auto& nb : g.neighbors(u)) {
      if (!in_b[nb.v]) continue;
      if (in_a[nb.v] && in_b[u] && nb.v < u) continue;
      total += nb.sign;
    }
  return total;
}

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  std::vector<Vertex> order(s.begin(), s.end());
  std::sort(order.begin(), order.end());
  std::vector<int> local(g.n(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) local[order[i]] = i;
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.push_back({local[e.u], local[e.v], e.sign});
  return {SignedGraph(static_cast<int>(order.size()), std::move(edges)), std::move(order)};
}

SignedGraph positive_graph(const SignedGraph& g) {
  std::vector<SignedEdge> edges;
  for (const auto& e : g.edges())
    if (e.sign > 0) edges.push_back(e);
  return SignedGraph(g.n(), std::move(edges));
}

bool is_connected(const SignedGraph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("connectivity of an empty vertex set");
  check_vertex_set(g, s);
  std::vector<char> in_s(g.n(), 0), seen(g.n(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<Vertex> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(u))
      if (in_s[nb.v] && !seen[nb.v]) {
        seen[nb.v] = 1;
        ++reached;
        stack.push_back(nb.v);
      }
  }
  return reached == s.size();
}

std::vector<int> connected_components(const SignedGraph& g) {
  std::vector<int> comp(g.n(), -1);
  int next = 0;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const auto& nb : g.neighbors(u))
        if (comp[nb.v] < 0) {
          comp[nb.v] = next;
          stack.push_back(nb.v);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace enumcc
