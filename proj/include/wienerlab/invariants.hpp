#pragma once

#include <span>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

// Entry i (1-based) counts vertices at distance exactly i from the base
// vertex; length is the base vertex's eccentricity. Coordinates beyond the
// stored length are implicitly zero.
struct DistanceVector {
  std::vector<int> counts;
  int order = 0;  // n of the ambient graph
};

// The n values k(v), non-decreasing.
struct KSequence {
  std::vector<int> values;
  int order = 0;
};

struct BadVertexRecord {
  int vertex;
  int k;        // first coordinate with count > 2
  int k_prime;  // second coordinate with count > 2
};

enum class Dominance { Equal, Precedes, Succeeds, Incomparable };

// Throws std::invalid_argument if g is disconnected.
DistanceVector distance_vector(const Graph& g, int v);

// Sum of i * counts[i] over coordinates (1-based weights).
long long angle_value(const DistanceVector& w);

long long transmission(const Graph& g, int v);

// Half the sum of all transmissions; requires a connected graph.
long long wiener(const Graph& g);

// The cycle vertex vector: all 2s, with a trailing 1 when n is even.
DistanceVector two_vector(int n);

// First coordinate of the distance vector exceeding 2, scanning 1..n-1;
// floor(n/2) when no such coordinate exists.
int k_of_vertex(const Graph& g, int v);

KSequence k_sequence(const Graph& g);

// Coordinatewise comparison after zero-padding to the common length.
Dominance dominates(std::span<const int> a, std::span<const int> b);
Dominance dominates(const KSequence& a, const KSequence& b);
Dominance dominates(const DistanceVector& a, const DistanceVector& b);

std::vector<BadVertexRecord> bad_vertices(const Graph& g);

// Sum of floor((n-1)/2) - k'(x) over bad vertices x. Meaningful for
// 2-connected graphs; terms may go negative otherwise.
long long b_value(const Graph& g);

}  // namespace wienerlab
