#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wienerlab {

// graph6 short form handles at most 62 vertices; nothing here needs more.
inline constexpr int kMaxOrder = 62;

// Marker for unreachable pairs in distance rows/matrices.
inline constexpr std::uint8_t kUnreachable = 0xFF;

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1, adjacency kept as one
// 64-bit row per vertex. Immutable by convention after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws std::invalid_argument on loops, out-of-range endpoints or
  // duplicate edges.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }

  std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
  }

  void add_edge(int u, int v);

  // Copy with one extra vertex n adjacent to the vertices of `mask`.
  Graph with_added_vertex(std::uint64_t mask) const;

  int degree(int v) const;
  int edge_count() const;

  // Mask with bits 0..n-1 set.
  std::uint64_t vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
  }

  bool operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
      if (adj_[static_cast<std::size_t>(v)] != other.adj_[static_cast<std::size_t>(v)]) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> adj_{};
};

struct DistanceMatrix {
  int n = 0;
  std::vector<std::uint8_t> d;  // row-major n*n, kUnreachable for disconnected pairs

  std::uint8_t at(int u, int v) const {
    return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
  }
};

// Hop distances from v to every vertex (kUnreachable where no path).
std::vector<std::uint8_t> bfs_distances(const Graph& g, int v);

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Connected, n >= 3 and no articulation vertex.
bool is_two_connected(const Graph& g);

// New graph on n-1 vertices with v removed; remaining labels shift down.
Graph delete_vertex(const Graph& g, int v);

// perm[old] = new label; result has edge (perm[u],perm[v]) per edge (u,v).
Graph apply_permutation(const Graph& g, std::span<const int> perm);
inline Graph apply_permutation(const Graph& g, std::initializer_list<int> perm) {
  return apply_permutation(g, std::span<const int>(perm.begin(), perm.size()));
}

}  // namespace wienerlab
