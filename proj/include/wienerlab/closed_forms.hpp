#pragma once

#include <string>

#include "wienerlab/graph.hpp"

namespace wienerlab {

// The four families with published parity-split Wiener polynomials.
enum class ClosedFormFamily { Cycle, H112, H122, H113 };

// Minimum valid n: Cycle 3, H112 4, H122 5, H113 6.
int closed_form_min_order(ClosedFormFamily family);

// Exact integer evaluation of the parity-split cubic; throws
// std::invalid_argument below the family minimum and std::logic_error if
// the division by 8 is not exact.
long long closed_form(ClosedFormFamily family, int n);

// (n * <2_n>) / 2, the cycle identity right-hand side; exact.
long long cycle_wiener_identity(int n);

std::string closed_form_family_name(ClosedFormFamily family);

// BFS Wiener index over an explicit edge list, independent of the Graph
// order cap; used to check the polynomials at large n.
long long edge_list_wiener(int n, const std::vector<Edge>& edges);

}  // namespace wienerlab
