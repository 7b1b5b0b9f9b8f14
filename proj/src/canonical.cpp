#include "wienerlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>

#include "wienerlab/graph6.hpp"

namespace wienerlab {

namespace {

// Minimizes the concatenation of adjacency columns (0,1),(0,2),(1,2),...
// over all vertex orderings, which is exactly the minimum graph6 string.
// Column bits are packed with the earliest prefix vertex most significant,
// so lexicographic comparison is integer comparison.
struct CanonSearch {
  const Graph& g;
  int n;
  std::uint64_t used = 0;
  std::uint64_t stamp = 0;
  bool have_best = false;
  std::array<int, kMaxOrder> cur{};
  std::array<std::uint64_t, kMaxOrder> cur_cols{};
  std::array<int, kMaxOrder> best_perm{};
  std::array<std::uint64_t, kMaxOrder> best_cols{};

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

  // Exchanging two (true or false) twins is an automorphism, so one branch
  // per twin pair suffices.
  bool has_unused_twin_below(int v) const {
    const std::uint64_t lower = ~used & ((1ull << v) - 1);
    for (std::uint64_t m = lower; m;) {
      const int u = std::countr_zero(m);
      m &= m - 1;
      if ((g.neighbors(u) & ~(1ull << v)) == (g.neighbors(v) & ~(1ull << u)))
        return true;
    }
    return false;
  }

  void dfs(int pos, bool equal_prefix) {
    if (pos == n) {
      if (equal_prefix && have_best) return;  // automorphic repeat of best
      best_cols = cur_cols;
      best_perm = cur;
      have_best = true;
      ++stamp;
      return;
    }
    std::array<std::pair<std::uint64_t, int>, kMaxOrder> cand;
    int cand_count = 0;
    for (std::uint64_t m = ~used & g.vertex_mask(); m;) {
      const int v = std::countr_zero(m);
      m &= m - 1;
      if (has_unused_twin_below(v)) continue;
      std::uint64_t col = 0;
      for (int j = 0; j < pos; ++j)
        col |= static_cast<std::uint64_t>(g.has_edge(cur[static_cast<std::size_t>(j)], v))
               << (pos - 1 - j);
      cand[static_cast<std::size_t>(cand_count++)] = {col, v};
    }
    std::sort(cand.begin(), cand.begin() + cand_count);
    std::uint64_t local_stamp = stamp;
    for (int i = 0; i < cand_count; ++i) {
      const auto [col, v] = cand[static_cast<std::size_t>(i)];
      if (stamp != local_stamp) {
        // A better leaf was found below this node, so our prefix now
        // matches the best prefix exactly.
        equal_prefix = true;
        local_stamp = stamp;
      }
      bool child_equal = false;
      if (have_best && equal_prefix) {
        if (col > best_cols[static_cast<std::size_t>(pos)]) break;
        child_equal = col == best_cols[static_cast<std::size_t>(pos)];
      }
      cur[static_cast<std::size_t>(pos)] = v;
      cur_cols[static_cast<std::size_t>(pos)] = col;
      used |= 1ull << v;
      dfs(pos + 1, child_equal);
      used &= ~(1ull << v);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  CanonSearch search(g);
  search.dfs(0, false);
  CanonicalForm cf;
  cf.perm.resize(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos)
    cf.perm[static_cast<std::size_t>(search.best_perm[static_cast<std::size_t>(pos)])] = pos;
  cf.graph6 = encode_graph6(apply_permutation(g, cf.perm));
  return cf;
}

std::string canonical_string(const Graph& g) { return canonical_form(g).graph6; }

}  // namespace wienerlab
