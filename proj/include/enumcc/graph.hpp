#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace enumcc {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

struct SignedEdge {
  Vertex u;
  Vertex v;
  int sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Neighbor {
  Vertex v;
  int sign;
};

enum class AdjacencyStorage { automatic, dense, hashed };

// Undirected graph with edge signs in {-1, +1}. Immutable after construction.
class SignedGraph {
 public:
  static constexpr int kDenseLimit = 2048;

  SignedGraph() = default;
  // Edges may be given in any orientation; stored with u < v, sorted.
  // Throws InputError on self-loops, duplicate pairs, bad ids or bad signs.
  SignedGraph(int n, std::vector<SignedEdge> edges,
              AdjacencyStorage storage = AdjacencyStorage::automatic);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int m_pos() const { return m_pos_; }
  int m_neg() const { return m_neg_; }
  bool dense() const { return !matrix_.empty() || n_ == 0; }

  const std::vector<SignedEdge>& edges() const { return edges_; }
  std::span<const Neighbor> neighbors(Vertex u) const {
    return {adj_.data() + offset_[u], adj_.data() + offset_[u + 1]};
  }
  int degree(Vertex u) const { return offset_[u + 1] - offset_[u]; }

  // 0 when there is no edge, including u == v.
  int sign(Vertex u, Vertex v) const {
    if (!matrix_.empty()) return matrix_[static_cast<std::size_t>(u) * n_ + v];
    if (u == v) return 0;
    auto it = map_.find(key(u, v));
    return it == map_.end() ? 0 : it->second;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  int m_pos_ = 0;
  int m_neg_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<int> offset_{0};
  std::vector<Neighbor> adj_;
  std::vector<std::int8_t> matrix_;
  std::unordered_map<std::uint64_t, std::int8_t> map_;
};

struct InducedSubgraph {
  SignedGraph graph;
  std::vector<Vertex> to_parent;  // new id -> id in the original graph
};

// Signed edge sum over unordered pairs {u, v}, u in a, v in b, u != v;
// each edge is counted once even when a and b overlap.
int sign_sum(const SignedGraph& g, std::span<const Vertex> a, std::span<const Vertex> b);

InducedSubgraph induced_subgraph(const SignedGraph& g, std::span<const Vertex> s);

SignedGraph positive_graph(const SignedGraph& g);

// Connectivity of g[s] ignoring signs. Throws InputError on empty s.
bool is_connected(const SignedGraph& g, std::span<const Vertex> s);

// Component id per vertex (ignoring signs), ids numbered by smallest member.
std::vector<int> connected_components(const SignedGraph& g);

void check_vertex_set(const SignedGraph& g, std::span<const Vertex> s);

}  // namespace enumcc
