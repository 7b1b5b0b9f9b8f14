#include "wienerlab/graph.hpp"

#include <bit>
#include <stdexcept>

namespace wienerlab {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder)
    throw std::invalid_argument("graph order must be in 1..62");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop edge");
    if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  adj_[static_cast<std::size_t>(u)] |= 1ull << v;
  adj_[static_cast<std::size_t>(v)] |= 1ull << u;
}

Graph Graph::with_added_vertex(std::uint64_t mask) const {
  if (n_ >= kMaxOrder) throw std::invalid_argument("graph order limit reached");
  Graph out = *this;
  out.n_ = n_ + 1;
  out.adj_[static_cast<std::size_t>(n_)] = mask;
  for (std::uint64_t m = mask; m;) {
    const int v = std::countr_zero(m);
    m &= m - 1;
    out.adj_[static_cast<std::size_t>(v)] |= 1ull << n_;
  }
  return out;
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::uint8_t> bfs_distances(const Graph& g, int v) {
  const int n = g.order();
  if (v < 0 || v >= n) throw std::invalid_argument("bfs source out of range");
  std::vector<std::uint8_t> row(static_cast<std::size_t>(n), kUnreachable);
  row[static_cast<std::size_t>(v)] = 0;
  std::uint64_t visited = 1ull << v;
  std::uint64_t frontier = visited;
  std::uint8_t d = 0;
  while (frontier) {
    ++d;
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      const int u = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(u);
    }
    next &= ~visited;
    for (std::uint64_t f = next; f;) {
      const int u = std::countr_zero(f);
      f &= f - 1;
      row[static_cast<std::size_t>(u)] = d;
    }
    visited |= next;
    frontier = next;
  }
  return row;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix m;
  m.n = n;
  m.d.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto row = bfs_distances(g, v);
    std::copy(row.begin(), row.end(),
              m.d.begin() + static_cast<std::ptrdiff_t>(v) * n);
  }
  return m;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t visited = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f;) {
      const int u = std::countr_zero(f);
      f &= f - 1;
      next |= g.neighbors(u);
    }
    frontier = next & ~visited;
    visited |= next;
  }
  return visited == g.vertex_mask();
}

namespace {

// Tarjan articulation search; returns true as soon as one cut vertex exists.
struct ArticulationScan {
  const Graph& g;
  std::array<int, kMaxOrder> disc{};
  std::array<int, kMaxOrder> low{};
  int timer = 0;

  explicit ArticulationScan(const Graph& graph) : g(graph) { disc.fill(-1); }

  bool dfs(int u, int parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (std::uint64_t nb = g.neighbors(u); nb;) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (disc[static_cast<std::size_t>(v)] < 0) {
        ++children;
        if (dfs(v, u)) return true;
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
        if (parent >= 0 && low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)])
          return true;
      } else if (v != parent) {
        low[static_cast<std::size_t>(u)] =
            std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
      }
    }
    return parent < 0 && children > 1;
  }
};

}  // namespace

bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < 2) return false;
  if (!is_connected(g)) return false;
  ArticulationScan scan(g);
  return !scan.dfs(0, -1);
}

Graph delete_vertex(const Graph& g, int v) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("cannot delete from a 1-vertex graph");
  Graph out(n - 1);
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    const int nu = u < v ? u : u - 1;
    for (std::uint64_t nb = g.neighbors(u); nb;) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (w == v || w <= u) continue;
      const int nw = w < v ? w : w - 1;
      out.add_edge(nu, nw);
    }
  }
  return out;
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  Graph out(n);
  for (int u = 0; u < n; ++u) {
    for (std::uint64_t nb = g.neighbors(u); nb;) {
      const int v = std::countr_zero(nb);
      nb &= nb - 1;
      if (v > u) out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    }
  }
  return out;
}

}  // namespace wienerlab
