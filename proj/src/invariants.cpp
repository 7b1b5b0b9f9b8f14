#include "wienerlab/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace wienerlab {

DistanceVector distance_vector(const Graph& g, int v) {
  const auto row = bfs_distances(g, v);
  int ecc = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (row[static_cast<std::size_t>(u)] == kUnreachable)
      throw std::invalid_argument("distance_vector requires a connected graph");
    ecc = std::max(ecc, static_cast<int>(row[static_cast<std::size_t>(u)]));
  }
  DistanceVector w;
  w.order = g.order();
  w.counts.assign(static_cast<std::size_t>(ecc), 0);
  for (int u = 0; u < g.order(); ++u)
    if (row[static_cast<std::size_t>(u)] > 0)
      ++w.counts[static_cast<std::size_t>(row[static_cast<std::size_t>(u)]) - 1];
  return w;
}

long long angle_value(const DistanceVector& w) {
  long long s = 0;
  for (std::size_t i = 0; i < w.counts.size(); ++i)
    s += static_cast<long long>(i + 1) * w.counts[i];
  return s;
}

long long transmission(const Graph& g, int v) {
  const auto row = bfs_distances(g, v);
  long long s = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (row[static_cast<std::size_t>(u)] == kUnreachable)
      throw std::invalid_argument("transmission requires a connected graph");
    s += row[static_cast<std::size_t>(u)];
  }
  return s;
}

long long wiener(const Graph& g) {
  long long twice = 0;
  for (int v = 0; v < g.order(); ++v) twice += transmission(g, v);
  return twice / 2;
}

DistanceVector two_vector(int n) {
  if (n < 3) throw std::invalid_argument("two_vector requires n >= 3");
  DistanceVector w;
  w.order = n;
  if (n % 2 == 0) {
    w.counts.assign(static_cast<std::size_t>(n / 2), 2);
    w.counts.back() = 1;
  } else {
    w.counts.assign(static_cast<std::size_t>((n - 1) / 2), 2);
  }
  return w;
}

int k_of_vertex(const Graph& g, int v) {
  const auto w = distance_vector(g, v);
  for (std::size_t i = 0; i < w.counts.size(); ++i)
    if (w.counts[i] > 2) return static_cast<int>(i + 1);
  return g.order() / 2;
}

KSequence k_sequence(const Graph& g) {
  KSequence k;
  k.order = g.order();
  k.values.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) k.values.push_back(k_of_vertex(g, v));
  std::sort(k.values.begin(), k.values.end());
  return k;
}

Dominance dominates(std::span<const int> a, std::span<const int> b) {
  const std::size_t len = std::max(a.size(), b.size());
  bool a_below = false, b_below = false;
  for (std::size_t i = 0; i < len; ++i) {
    const int av = i < a.size() ? a[i] : 0;
    const int bv = i < b.size() ? b[i] : 0;
    if (av < bv) a_below = true;
    if (bv < av) b_below = true;
  }
  if (a_below && b_below) return Dominance::Incomparable;
  if (a_below) return Dominance::Precedes;
  if (b_below) return Dominance::Succeeds;
  return Dominance::Equal;
}

Dominance dominates(const KSequence& a, const KSequence& b) {
  if (a.order != b.order)
    throw std::invalid_argument("k-sequences of different orders are not comparable");
  return dominates(std::span<const int>(a.values), std::span<const int>(b.values));
}

Dominance dominates(const DistanceVector& a, const DistanceVector& b) {
  if (a.order != b.order)
    throw std::invalid_argument("distance vectors of different orders are not comparable");
  return dominates(std::span<const int>(a.counts), std::span<const int>(b.counts));
}

std::vector<BadVertexRecord> bad_vertices(const Graph& g) {
  std::vector<BadVertexRecord> out;
  for (int v = 0; v < g.order(); ++v) {
    const auto w = distance_vector(g, v);
    int k = 0, k_prime = 0;
    for (std::size_t i = 0; i < w.counts.size(); ++i) {
      if (w.counts[i] > 2) {
        if (k == 0) {
          k = static_cast<int>(i + 1);
        } else {
          k_prime = static_cast<int>(i + 1);
          break;
        }
      }
    }
    if (k_prime > 0) out.push_back({v, k, k_prime});
  }
  return out;
}

long long b_value(const Graph& g) {
  const long long half = (g.order() - 1) / 2;
  long long s = 0;
  for (const auto& rec : bad_vertices(g)) s += half - rec.k_prime;
  return s;
}

}  // namespace wienerlab
