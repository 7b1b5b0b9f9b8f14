#include "wienerlab/enumerate.hpp"

#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wienerlab/graph6.hpp"

namespace wienerlab {

namespace {

constexpr int kInternalMaxOrder = 12;
constexpr int kLabeledMaxOrder = 7;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct LevelEntry {
  Graph graph;
  std::string canon;
};

// Expands `g` by one vertex; every unlabeled child appears exactly once
// across the whole generation because a child survives only when its
// canonical deletion vertex reproduces this parent, and parents are
// pairwise non-isomorphic by induction.
template <class ChildFn>
void for_each_child(const Graph& g, const std::string& g_canon, bool final_level,
                    ChildFn&& fn) {
  const int k = g.order();
  std::unordered_set<std::string> seen;
  const std::uint64_t subsets = 1ull << k;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    if (final_level && std::popcount(s) < 2) continue;  // 2-connected needs degree >= 2
    const Graph child = g.with_added_vertex(s);
    if (final_level && !is_two_connected(child)) continue;
    CanonicalForm cf = canonical_form(child);
    if (!seen.insert(cf.graph6).second) continue;
    int deletion_vertex = 0;
    while (cf.perm[static_cast<std::size_t>(deletion_vertex)] != k) ++deletion_vertex;
    if (deletion_vertex != k &&
        canonical_string(delete_vertex(child, deletion_vertex)) != g_canon)
      continue;
    fn(child, std::move(cf));
  }
}

struct OrderlyEnumerator {
  int target;
  int min_edges;
  int max_edges;
  const GraphSink& sink;

  bool edges_ok(const Graph& g) const {
    const int m = g.edge_count();
    if (min_edges >= 0 && m < min_edges) return false;
    if (max_edges >= 0 && m > max_edges) return false;
    return true;
  }

  void descend(const Graph& g, const std::string& g_canon, StreamStats& stats) const {
    const bool final_level = g.order() + 1 == target;
    for_each_child(g, g_canon, final_level,
                   [&](const Graph& child, CanonicalForm cf) {
                     if (final_level) {
                       if (!edges_ok(child)) return;
                       stats.absorb(cf.graph6);
                       sink(apply_permutation(child, cf.perm), cf);
                     } else {
                       descend(child, cf.graph6, stats);
                     }
                   });
  }
};

StreamStats enumerate_internal(const EnumerationConfig& cfg, const GraphSink& sink) {
  if (cfg.n < 3 || cfg.n > kInternalMaxOrder)
    throw ResourceLimitError("internal-canonical backend supports 3 <= n <= 12");
  int workers = cfg.workers;
  if (workers <= 0)
    workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  OrderlyEnumerator enumerator{cfg.n, cfg.min_edges, cfg.max_edges, sink};

  // Materialize the tree serially up to a shallow root level, then fan the
  // remaining subtrees out across workers.
  const int root_level = std::min(cfg.n - 1, 8);
  std::vector<LevelEntry> level;
  {
    const Graph k1(1);
    level.push_back({k1, canonical_string(k1)});
  }
  for (int k = 1; k < root_level; ++k) {
    std::vector<LevelEntry> next;
    for (const auto& entry : level)
      for_each_child(entry.graph, entry.canon, false,
                     [&](const Graph& child, CanonicalForm cf) {
                       next.push_back({child, std::move(cf.graph6)});
                     });
    level = std::move(next);
  }

  StreamStats stats;
  if (workers == 1) {
    // Serial reference path: deterministic depth-first emission order.
    for (const auto& entry : level) enumerator.descend(entry.graph, entry.canon, stats);
    return stats;
  }
#ifdef _OPENMP
  const auto total = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel num_threads(workers)
  {
    StreamStats local;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < total; ++i)
      enumerator.descend(level[static_cast<std::size_t>(i)].graph,
                         level[static_cast<std::size_t>(i)].canon, local);
#pragma omp critical(wienerlab_enum_stats)
    stats.merge(local);
  }
#else
  for (const auto& entry : level) enumerator.descend(entry.graph, entry.canon, stats);
#endif
  return stats;
}

StreamStats enumerate_labeled_dedup(const EnumerationConfig& cfg, const GraphSink& sink) {
  if (cfg.n < 3 || cfg.n > kLabeledMaxOrder)
    throw ResourceLimitError("labeled-dedup backend supports 3 <= n <= 7");
  const int n = cfg.n;
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  StreamStats stats;
  std::unordered_set<std::string> seen;
  const std::uint64_t masks = 1ull << pairs.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
    if (!is_two_connected(g)) continue;
    CanonicalForm cf = canonical_form(g);
    if (!seen.insert(cf.graph6).second) continue;
    const int m = g.edge_count();
    if (cfg.min_edges >= 0 && m < cfg.min_edges) continue;
    if (cfg.max_edges >= 0 && m > cfg.max_edges) continue;
    stats.absorb(cf.graph6);
    sink(apply_permutation(g, cf.perm), cf);
  }
  return stats;
}

}  // namespace

void StreamStats::absorb(const std::string& key) {
  const std::uint64_t h = fnv1a(key);
  ++count;
  digest_sum += h;
  digest_xor ^= h;
}

void StreamStats::merge(const StreamStats& other) {
  count += other.count;
  digest_sum += other.digest_sum;
  digest_xor ^= other.digest_xor;
}

StreamStats enumerate_two_connected(const EnumerationConfig& cfg, const GraphSink& sink) {
  switch (cfg.backend) {
    case Backend::InternalCanonical: return enumerate_internal(cfg, sink);
    case Backend::LabeledDedup: return enumerate_labeled_dedup(cfg, sink);
    case Backend::ExternalStream:
      throw std::invalid_argument("external-stream enumeration goes through filter_stream");
  }
  throw std::invalid_argument("bad enumeration backend");
}

FilterStats filter_stream(std::istream& in, const FilterOptions& opt, const FilterSink& sink) {
  FilterStats stats;
  std::unordered_set<std::string> seen;
  for_each_graph6_line(in, [&](std::size_t line_no, const std::string& line) {
    ++stats.read;
    Graph g;
    try {
      g = decode_graph6(line);
    } catch (const Graph6Error& err) {
      ++stats.malformed;
      if (opt.abort_on_malformed)
        throw Graph6Error("line " + std::to_string(line_no) + ": " + err.what());
      return;
    }
    if ((opt.order >= 0 && g.order() != opt.order) ||
        (opt.require_two_connected && !is_two_connected(g))) {
      ++stats.rejected;
      return;
    }
    if (opt.canonical_dedup) {
      std::string canon = canonical_string(g);
      if (!seen.insert(canon).second) {
        ++stats.rejected;
        return;
      }
      stats.stream.absorb(canon);
    } else {
      stats.stream.absorb(line);
    }
    ++stats.kept;
    sink(g);
  });
  return stats;
}

}  // namespace wienerlab
