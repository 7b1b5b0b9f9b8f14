#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "wienerlab/canonical.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/graph.hpp"
#include "wienerlab/graph6.hpp"

using namespace wienerlab;

TEST_CASE("graph6 encodes known graphs") {
    CHECK(encode_graph6(Graph::from_edges(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 2000; ++iter) {
        int n = 1 + int(rng() % 20);
        Graph g = testsupport::random_graph(n, 0.3, rng);
        Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 decode rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), Graph6Error);
    CHECK_THROWS_AS(decode_graph6("D"), Graph6Error);           // truncated
    CHECK_THROWS_AS(decode_graph6("Dhc~"), Graph6Error);        // trailing bytes
    CHECK_THROWS_AS(decode_graph6("D\x01\x02"), Graph6Error);   // bytes out of range
}

TEST_CASE("bfs distances on a path") {
    Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto d = bfs_distances(g, 0);
    for (int v = 0; v < 5; ++v) CHECK(d[v] == v);
}

TEST_CASE("connectivity predicates") {
    CHECK(is_connected(cycle(6)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));

    CHECK(is_two_connected(cycle(3)));
    CHECK(is_two_connected(theta(8, 2, 3)));
    // path: every internal vertex is a cut vertex
    CHECK_FALSE(is_two_connected(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})));
    // two triangles sharing a vertex
    CHECK_FALSE(is_two_connected(
        Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}})));
}

TEST_CASE("two-connectivity matches brute definition on random graphs") {
    std::mt19937 rng(777);
    for (int iter = 0; iter < 1500; ++iter) {
        int n = 3 + int(rng() % 7);
        Graph g = testsupport::random_graph(n, 0.35, rng);
        CHECK(is_two_connected(g) == testsupport::brute_two_connected(g));
    }
}

TEST_CASE("canonical form matches brute minimum over permutations") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + int(rng() % 6);  // up to 7
        Graph g = testsupport::random_graph(n, 0.4, rng);
        CHECK(canonical_form(g).graph6 == testsupport::brute_canonical_graph6(g));
    }
}

TEST_CASE("canonical form is relabeling invariant") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 500; ++iter) {
        int n = 3 + int(rng() % 8);
        Graph g = testsupport::random_graph(n, 0.4, rng);
        std::string c = canonical_form(g).graph6;
        auto perm = testsupport::random_permutation(n, rng);
        CHECK(canonical_form(apply_permutation(g, perm)).graph6 == c);
    }
}

TEST_CASE("canonical permutation reproduces the canonical string") {
    std::mt19937 rng(9);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 3 + int(rng() % 8);
        Graph g = testsupport::random_graph(n, 0.45, rng);
        auto cf = canonical_form(g);
        CHECK(encode_graph6(apply_permutation(g, cf.perm)) == cf.graph6);
    }
}

TEST_CASE("delete_vertex relabels densely") {
    Graph g = cycle(5);
    Graph h = delete_vertex(g, 2);
    CHECK(h.order() == 4);
    CHECK(h.edge_count() == 3);  // path on 4 vertices
    CHECK_FALSE(is_two_connected(h));
}
