#pragma once

#include <string>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

// Edge-list builders, usable beyond the Graph order cap (for the
// closed-form BFS oracle at large n).
std::vector<Edge> cycle_edges(int n);
std::vector<Edge> theta_edges(int n, int p, int q);
std::vector<Edge> i_chord_edges(int n, int i);
std::vector<Edge> h22_plus_edges(int n);

Graph cycle(int n);
Graph complete(int n);

// Two hubs 0 and 1 joined by internally disjoint paths of lengths p, q and
// n-p-q+1; internal vertices numbered consecutively from 2, path by path.
// Requires 1 <= p <= q <= n-p-q+1 and q > 1.
Graph theta(int n, int p, int q);

// C_n on labels x_1..x_n -> 0..n-1 plus chords x_1x_3 and x_i x_{i+2};
// requires 1 < i <= n-2. Member of the class I_n.
Graph i_chord(int n, int i);

// The four fixed exceptional graphs, addressed as "g6-1", "g6-2", "g6-3",
// "g8-1".
Graph exceptional(const std::string& name);

// H_{n,2,2} plus the edge joining the midpoints of its two length-2
// hub-to-hub paths; Wiener index is W(H_{n,2,2}) - 1.
Graph h22_plus(int n);

// H_{n,1,q}, a member of the class script-H; requires n >= 6 and
// 3 <= q <= n/2.
Graph script_h_member(int n, int q);

// Parses CLI family specs such as "cycle:n=9", "theta:n=8,p=1,q=4",
// "ichord:n=6,i=4", "g6-2", "h22plus:n=12", "scripth:n=9,q=3",
// "complete:n=4". Throws std::invalid_argument on anything else.
Graph build_family(const std::string& spec);

}  // namespace wienerlab
