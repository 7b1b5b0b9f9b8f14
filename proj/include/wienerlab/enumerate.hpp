#pragma once

#include <cstdint>
#include <stdexcept>
#include <functional>
#include <istream>
#include <string>

#include "wienerlab/canonical.hpp"
#include "wienerlab/graph.hpp"

namespace wienerlab {

enum class Backend { InternalCanonical, LabeledDedup, ExternalStream };

// Requested order is beyond a backend's resource guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationConfig {
  int n = 0;
  Backend backend = Backend::InternalCanonical;
  int workers = 1;     // <= 0 means all hardware threads
  int min_edges = -1;  // inclusive filters, -1 disables
  int max_edges = -1;
};

// Running count plus a commutative digest of canonical strings, so
// multi-worker runs can be compared against the serial reference
// regardless of emission order.
struct StreamStats {
  std::uint64_t count = 0;
  std::uint64_t digest_sum = 0;
  std::uint64_t digest_xor = 0;

  void absorb(const std::string& key);
  void merge(const StreamStats& other);
  bool same_multiset(const StreamStats& other) const {
    return count == other.count && digest_sum == other.digest_sum &&
           digest_xor == other.digest_xor;
  }
};

// Invoked once per isomorphism class with the canonically labeled graph
// (encode_graph6(g) == cf.graph6); with workers > 1 calls may arrive
// concurrently, so the sink must be thread-safe.
using GraphSink = std::function<void(const Graph&, const CanonicalForm&)>;

// Isomorph-free enumeration of 2-connected graphs on cfg.n vertices.
// InternalCanonical: orderly vertex augmentation with a canonical-parent
// test, 3 <= n <= 12. LabeledDedup: brute-force over labeled graphs with
// canonical dedup, 3 <= n <= 7, kept as an independent oracle.
StreamStats enumerate_two_connected(const EnumerationConfig& cfg, const GraphSink& sink);

struct FilterOptions {
  int order = -1;  // require this order; -1 accepts any
  bool require_two_connected = true;
  bool canonical_dedup = false;
  bool abort_on_malformed = false;
};

struct FilterStats {
  std::uint64_t read = 0;
  std::uint64_t kept = 0;
  std::uint64_t rejected = 0;
  std::uint64_t malformed = 0;
  StreamStats stream;  // canonical digest when dedup is on, raw lines otherwise
};

using FilterSink = std::function<void(const Graph&)>;

// Forwards graph6 lines passing the predicate; malformed lines are counted
// (and rethrown with their line number when abort_on_malformed is set).
FilterStats filter_stream(std::istream& in, const FilterOptions& opt, const FilterSink& sink);

}  // namespace wienerlab
