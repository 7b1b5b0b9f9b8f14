#pragma once

// Slow reference implementations used to cross-check the real ones, plus a
// deterministic random graph source. Everything here is brute force on
// purpose; keep n small.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/graph6.hpp"

namespace testsupport {

// Minimum graph6 string over all n! relabelings. Only sane for n <= 8.
inline std::string brute_canonical_graph6(const wienerlab::Graph& g) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s = wienerlab::encode_graph6(wienerlab::apply_permutation(g, perm));
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Definition-level check: connected, n >= 3, and no single vertex deletion
// disconnects the graph.
inline bool brute_two_connected(const wienerlab::Graph& g) {
    if (g.order() < 3 || !wienerlab::is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (!wienerlab::is_connected(wienerlab::delete_vertex(g, v))) return false;
    }
    return true;
}

inline long long brute_wiener(const wienerlab::Graph& g) {
    auto d = wienerlab::all_pairs_distances(g);
    long long w = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) w += d.at(u, v);
    return w;
}

// G(n, p) with a fixed engine so failures reproduce.
inline wienerlab::Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<wienerlab::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return wienerlab::Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace testsupport
