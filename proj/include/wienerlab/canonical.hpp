#pragma once

#include <string>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

// Canonical representative of an isomorphism class: the lexicographically
// smallest graph6 encoding over all relabelings, plus one permutation
// realizing it. Byte-equality of `graph6` decides isomorphism.
struct CanonicalForm {
  std::string graph6;
  std::vector<int> perm;  // perm[original vertex] = canonical label
};

// Branch-and-bound over vertex placements with prefix pruning and twin
// skipping; exact minimum, no heuristics.
CanonicalForm canonical_form(const Graph& g);

// Convenience: canonical string only.
std::string canonical_string(const Graph& g);

}  // namespace wienerlab
