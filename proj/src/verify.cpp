#include "wienerlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wienerlab/closed_forms.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/graph6.hpp"
#include "wienerlab/invariants.hpp"

namespace wienerlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Golden per-order class counts of 2-connected graphs, cross-validated
// against the labeled-dedup oracle (n <= 7) and published nonseparable
// graph counts (n = 8..10).
const std::map<int, std::uint64_t> kGoldenCounts = {
    {3, 1},   {4, 3},    {5, 10},     {6, 56},
    {7, 468}, {8, 7123}, {9, 194066}, {10, 9743542}};

// All 18 published W(H_{n,p,q}) values for n <= 8 and n = 10.
struct Table1Entry {
  int n, p, q;
  long long w;
};
const std::vector<Table1Entry> kTable1 = {
    {4, 1, 2, 7},    {5, 1, 2, 14},   {5, 2, 2, 14},   {6, 1, 2, 24},
    {6, 1, 3, 25},   {6, 2, 2, 23},   {7, 1, 2, 39},   {7, 1, 3, 38},
    {7, 2, 2, 38},   {8, 1, 2, 58},   {8, 1, 3, 58},   {8, 1, 4, 55},
    {8, 2, 2, 56},   {10, 1, 2, 115}, {10, 1, 3, 113}, {10, 1, 4, 107},
    {10, 1, 5, 109}, {10, 2, 2, 112}};

std::string theta_name(int n, int p, int q) {
  std::ostringstream out;
  out << "H_{" << n << "," << p << "," << q << "}";
  return out.str();
}

std::vector<std::pair<std::string, Graph>> named_list(int n) {
  std::vector<std::pair<std::string, Graph>> out;
  if (n >= 3) out.emplace_back("C_" + std::to_string(n), cycle(n));
  out.emplace_back("K_" + std::to_string(n), complete(n));
  for (int p = 1; p <= n; ++p)
    for (int q = std::max(p, 2); q <= n - p - q + 1; ++q)
      out.emplace_back(theta_name(n, p, q), theta(n, p, q));
  if (n == 6)
    for (const char* name : {"g6-1", "g6-2", "g6-3"})
      out.emplace_back(std::string(name) == "g6-1" ? "G_6^1"
                       : std::string(name) == "g6-2" ? "G_6^2"
                                                    : "G_6^3",
                       exceptional(name));
  if (n == 8) out.emplace_back("G_8^1", exceptional("g8-1"));
  if (n >= 5)
    out.emplace_back("H_{" + std::to_string(n) + ",2,2}^+", h22_plus(n));
  if (n >= 4)
    for (int i = 2; i <= n - 2; ++i)
      out.emplace_back("I_{" + std::to_string(n) + "," + std::to_string(i) + "}",
                       i_chord(n, i));
  return out;
}

// Per-order family tier structure of the extremal ordering; outermost is
// the top tier.
std::vector<std::vector<std::string>> expected_tier_families(int n) {
  const std::string c = "C_" + std::to_string(n);
  const auto h = [n](int p, int q) { return theta_name(n, p, q); };
  switch (n) {
    case 3: return {{c}};
    case 4: return {{c}, {h(1, 2)}, {"K_4"}};
    case 5: return {{c}, {h(1, 2), h(2, 2)}};
    case 6: return {{c}, {h(1, 3)}, {h(1, 2)}, {h(2, 2), "G_6^1", "G_6^2", "G_6^3"}};
    case 7: return {{c}, {h(1, 2)}, {h(2, 2), h(1, 3)}};
    case 8: return {{c}, {h(1, 2), h(1, 3)}, {h(2, 2), "G_8^1"}};
    case 9: return {{c}, {h(1, 2)}, {h(2, 2)}};
    case 10: return {{c}, {h(1, 2)}, {h(1, 3)}, {h(2, 2)}};
    default: return {{c}, {h(1, 2)}, {h(2, 2)}};  // n >= 11
  }
}

const char* status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::SkippedResource: return "skipped-resource";
  }
  return "?";
}

void add_witness(ClaimReport& report, const Graph& g, long long w,
                 const std::map<std::string, std::string>& names,
                 const std::string& canon) {
  Witness witness;
  witness.graph6 = canon;
  witness.wiener = w;
  const auto it = names.find(canon);
  if (it != names.end()) witness.family = it->second;
  report.witnesses.push_back(std::move(witness));
  (void)g;
}

void fail(ClaimReport& report, const std::string& note) {
  report.status = ClaimStatus::Fail;
  report.notes.push_back(note);
}

}  // namespace

void TierTable::add(long long w, const std::string& canon) {
  if (static_cast<int>(tiers_.size()) == max_tiers_ &&
      w < tiers_.rbegin()->first)
    return;
  auto& [members, count] = tiers_[w];
  ++count;
  if (members.size() < kTierMemberCap) members.push_back(canon);
  if (static_cast<int>(tiers_.size()) > max_tiers_)
    tiers_.erase(std::prev(tiers_.end()));
}

std::vector<TierTable::Tier> TierTable::tiers() const {
  std::vector<Tier> out;
  for (const auto& [w, entry] : tiers_) {
    Tier tier{w, entry.first, entry.second};
    std::sort(tier.members.begin(), tier.members.end());
    out.push_back(std::move(tier));
  }
  return out;
}

std::map<std::string, std::string> named_graphs(int n) {
  std::map<std::string, std::string> out;
  for (const auto& [name, g] : named_list(n))
    out.emplace(canonical_string(g), name);  // first name wins on coincidence
  return out;
}

std::vector<RankingEntry> tiers_to_ranking(const TierTable& table, int top_k,
                                           const std::map<std::string, std::string>& names) {
  std::vector<RankingEntry> out;
  int rank = 0;
  for (const auto& tier : table.tiers()) {
    if (++rank > top_k) break;  // whole tiers only, so ties are never cut
    for (const auto& canon : tier.members) {
      RankingEntry entry;
      entry.rank = rank;
      entry.graph6 = canon;
      entry.wiener = tier.wiener;
      const auto it = names.find(canon);
      if (it != names.end()) entry.family = it->second;
      out.push_back(std::move(entry));
    }
  }
  return out;
}

std::vector<RankingEntry> rank_by_wiener(const EnumerationConfig& cfg, int top_k) {
  TierTable table(top_k);
  std::mutex mutex;
  const StreamStats stats = enumerate_two_connected(
      cfg, [&](const Graph& g, const CanonicalForm& cf) {
        const long long w = wiener(g);
        std::lock_guard lock(mutex);
        table.add(w, cf.graph6);
      });
  if (stats.count == 0) throw std::invalid_argument("empty enumeration stream");
  return tiers_to_ranking(table, top_k, named_graphs(cfg.n));
}

EnumerationClaims run_enumeration_claims(int n, int workers) {
  const auto start = Clock::now();
  const auto names = named_graphs(n);
  const long long transmission_cap = static_cast<long long>(n) * n / 4;

  // Implication-sweep reference data, meaningful for n >= 4 (H_{n,2,2} needs n >= 5).
  const bool implication_pass = n >= 4 && n <= 8;
  Graph h112, h122;
  KSequence k112, k122;
  long long w112 = 0, w122 = 0, sum_k112 = 0, sum_k122 = 0;
  if (implication_pass) {
    h112 = theta(n, 1, 2);
    k112 = k_sequence(h112);
    w112 = wiener(h112);
    sum_k112 = std::accumulate(k112.values.begin(), k112.values.end(), 0ll);
    if (n >= 5) {
      h122 = theta(n, 2, 2);
      k122 = k_sequence(h122);
      w122 = wiener(h122);
      sum_k122 = std::accumulate(k122.values.begin(), k122.values.end(), 0ll);
    }
  }

  TierTable table(8);
  std::mutex mutex;
  std::uint64_t transmission_violations = 0;
  std::vector<Witness> transmission_witnesses;
  struct ImplicationCheck {
    std::string id;
    std::uint64_t hits = 0;
    std::vector<Witness> counterexamples;
  };
  std::vector<ImplicationCheck> implication_checks;
  if (implication_pass) {
    if (n >= 5) implication_checks.push_back({"k-implies-W vs H_{n,1,2}"});
    if (n >= 5) implication_checks.push_back({"k-implies-W vs H_{n,2,2}"});
    implication_checks.push_back({"k-sum/b vs H_{n,1,2}"});
    if (n >= 5) implication_checks.push_back({"k-sum/b vs H_{n,2,2}"});
  }

  const auto sink = [&](const Graph& g, const CanonicalForm& cf) {
    long long w = 0;
    long long max_transmission = 0;
    for (int v = 0; v < g.order(); ++v) {
      const long long t = transmission(g, v);
      w += t;
      max_transmission = std::max(max_transmission, t);
    }
    w /= 2;

    bool hyp[4] = {false, false, false, false};
    bool bad[4] = {false, false, false, false};
    if (implication_pass) {
      const KSequence ks = k_sequence(g);
      const long long sum_k =
          std::accumulate(ks.values.begin(), ks.values.end(), 0ll);
      const long long b = b_value(g);
      int slot = 0;
      if (n >= 5) {
        hyp[slot] = dominates(ks, k112) == Dominance::Precedes;
        bad[slot] = hyp[slot] && !(w < w112);
        ++slot;
        hyp[slot] = dominates(ks, k122) == Dominance::Precedes;
        bad[slot] = hyp[slot] && !(w < w122);
        ++slot;
      }
      hyp[slot] = sum_k < b + sum_k112;
      bad[slot] = hyp[slot] && !(w < w112);
      ++slot;
      if (n >= 5) {
        hyp[slot] = sum_k < b + sum_k122;
        bad[slot] = hyp[slot] && !(w < w122);
      }
    }

    std::lock_guard lock(mutex);
    table.add(w, cf.graph6);
    if (max_transmission > transmission_cap) {
      ++transmission_violations;
      if (transmission_witnesses.size() < 3)
        transmission_witnesses.push_back({cf.graph6, w, {}});
    }
    for (std::size_t i = 0; i < implication_checks.size(); ++i) {
      if (hyp[i]) ++implication_checks[i].hits;
      if (bad[i] && implication_checks[i].counterexamples.size() < 3)
        implication_checks[i].counterexamples.push_back({cf.graph6, w, {}});
    }
  };

  EnumerationConfig cfg;
  cfg.n = n;
  cfg.backend = Backend::InternalCanonical;
  cfg.workers = workers;
  EnumerationClaims result;
  result.stats = enumerate_two_connected(cfg, sink);
  const double elapsed = seconds_since(start);
  const auto tiers = table.tiers();

  const auto base_report = [&](const std::string& claim) {
    ClaimReport report;
    report.claim = claim;
    report.n = n;
    report.seconds = elapsed;
    report.metrics["classes"] = static_cast<long long>(result.stats.count);
    return report;
  };

  {  // C_n is the unique Wiener maximizer.
    ClaimReport report = base_report("unique-max");
    const std::string c_canon = canonical_string(cycle(n));
    if (tiers.empty() || tiers[0].member_count != 1 ||
        tiers[0].members[0] != c_canon)
      fail(report, "top tier is not exactly {C_n}");
    else
      report.metrics["max_wiener"] = tiers[0].wiener;
    result.reports.push_back(std::move(report));
  }

  if (n >= 4) {  // Second/third tier structure.
    ClaimReport report = base_report("top-tiers");
    const auto expected = expected_tier_families(n);
    std::map<std::string, std::string> name_to_canon;
    for (const auto& [canon, name] : names) name_to_canon[name] = canon;
    for (std::size_t t = 0; t < expected.size(); ++t) {
      if (t >= tiers.size()) {
        fail(report, "fewer tiers than expected");
        break;
      }
      std::vector<std::string> want;
      for (const auto& family : expected[t]) want.push_back(name_to_canon.at(family));
      std::sort(want.begin(), want.end());
      if (tiers[t].member_count != want.size() || tiers[t].members != want) {
        std::ostringstream note;
        note << "tier " << t + 1 << " (W=" << tiers[t].wiener
             << ") does not match the expected family set";
        fail(report, note.str());
        for (const auto& canon : tiers[t].members)
          add_witness(report, Graph(), tiers[t].wiener, names, canon);
      } else {
        report.metrics["tier" + std::to_string(t + 1) + "_wiener"] = tiers[t].wiener;
      }
    }
    if (n == 4 && result.stats.count != 3)
      fail(report, "expected exactly three 2-connected graphs at n=4");
    result.reports.push_back(std::move(report));
  }

  {  // Golden class counts.
    ClaimReport report = base_report("counts");
    const auto it = kGoldenCounts.find(n);
    if (it == kGoldenCounts.end()) {
      report.notes.push_back("no golden count frozen for this order");
    } else if (result.stats.count != it->second) {
      std::ostringstream note;
      note << "expected " << it->second << " classes, enumerated "
           << result.stats.count;
      fail(report, note.str());
    }
    result.reports.push_back(std::move(report));
  }

  {  // Per-vertex transmission bound floor(n^2/4).
    ClaimReport report = base_report("transmission-bound");
    report.metrics["bound"] = transmission_cap;
    if (transmission_violations > 0) {
      fail(report, "transmission bound violated");
      report.witnesses = transmission_witnesses;
    }
    result.reports.push_back(std::move(report));
  }

  if (implication_pass) {
    ClaimReport report = base_report("implications");
    for (const auto& check : implication_checks) {
      report.metrics["hits: " + check.id] = static_cast<long long>(check.hits);
      if (check.hits == 0)
        fail(report, "vacuous hypothesis: " + check.id);
      if (!check.counterexamples.empty()) {
        fail(report, "counterexample to " + check.id);
        for (const auto& witness : check.counterexamples)
          report.witnesses.push_back(witness);
      }
    }
    if (n == 4)
      report.notes.push_back("k-implies-W requires n >= 5; only the k-sum/b implication applies");
    result.reports.push_back(std::move(report));
  }

  {  // Informational 4th/5th-tier report.
    ClaimReport report = base_report("tier45");
    report.informational = true;
    for (std::size_t t = 3; t < std::min<std::size_t>(5, tiers.size()); ++t) {
      const std::string label = "tier" + std::to_string(t + 1);
      report.metrics[label + "_wiener"] = tiers[t].wiener;
      report.metrics[label + "_size"] =
          static_cast<long long>(tiers[t].member_count);
      for (const auto& canon : tiers[t].members)
        add_witness(report, Graph(), tiers[t].wiener, names, canon);
    }
    if (n >= 5 && tiers.size() >= 4) {
      const std::string plus_canon = canonical_string(h22_plus(n));
      const bool in_tier4 =
          std::binary_search(tiers[3].members.begin(), tiers[3].members.end(), plus_canon);
      report.metrics["h22plus_in_tier4"] = in_tier4 ? 1 : 0;
      if (in_tier4)
        report.notes.push_back(tiers[3].member_count == 1
                                   ? "H_{n,2,2}^+ is the unique rank-4 graph"
                                   : "H_{n,2,2}^+ shares the rank-4 tier");
      if (n >= 6 && tiers.size() >= 5) {
        const std::string h113_canon = canonical_string(theta(n, 1, 3));
        report.metrics["h113_in_tier5"] =
            std::binary_search(tiers[4].members.begin(), tiers[4].members.end(), h113_canon)
                ? 1
                : 0;
      }
    }
    result.reports.push_back(std::move(report));
  }

  return result;
}

ClaimReport verify_table1() {
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = "table1";
  for (const auto& entry : kTable1) {
    const long long w = wiener(theta(entry.n, entry.p, entry.q));
    if (w != entry.w) {
      std::ostringstream note;
      note << theta_name(entry.n, entry.p, entry.q) << ": computed " << w
           << ", published " << entry.w;
      fail(report, note.str());
    }
  }
  report.metrics["values_checked"] = static_cast<long long>(kTable1.size());
  report.seconds = seconds_since(start);
  return report;
}

ClaimReport verify_table2(int max_n) {
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = "table2";
  report.n = max_n;
  long long checked = 0;
  for (const auto family :
       {ClosedFormFamily::Cycle, ClosedFormFamily::H112, ClosedFormFamily::H122,
        ClosedFormFamily::H113}) {
    for (int n = closed_form_min_order(family); n <= max_n; ++n) {
      std::vector<Edge> edges;
      switch (family) {
        case ClosedFormFamily::Cycle: edges = cycle_edges(n); break;
        case ClosedFormFamily::H112: edges = theta_edges(n, 1, 2); break;
        case ClosedFormFamily::H122: edges = theta_edges(n, 2, 2); break;
        case ClosedFormFamily::H113: edges = theta_edges(n, 1, 3); break;
      }
      const long long via_bfs = edge_list_wiener(n, edges);
      const long long via_formula = closed_form(family, n);
      if (via_bfs != via_formula) {
        std::ostringstream note;
        note << closed_form_family_name(family) << " at n=" << n << ": BFS "
             << via_bfs << " vs formula " << via_formula;
        fail(report, note.str());
      }
      ++checked;
    }
  }
  for (int n = 3; n <= max_n; ++n)
    if (cycle_wiener_identity(n) != closed_form(ClosedFormFamily::Cycle, n))
      fail(report, "cycle_wiener_identity mismatch at n=" + std::to_string(n));
  report.metrics["values_checked"] = checked;
  report.seconds = seconds_since(start);
  return report;
}

ClaimReport verify_top_tiers(int n, int workers) {
  auto claims = run_enumeration_claims(n, workers);
  for (auto& report : claims.reports)
    if (report.claim == "top-tiers") return std::move(report);
  throw std::invalid_argument("top-tiers claim requires n >= 4");
}

ClaimReport verify_chord_cases(int n) {
  if (n != 6 && n != 8 && n != 10)
    throw std::invalid_argument("case-2 check is defined for n in {6,8,10}");
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = "chord-cases";
  report.n = n;
  const long long w122 = wiener(theta(n, 2, 2));
  const auto names = named_graphs(n);

  std::set<std::string> expected_exceptions;
  if (n == 6) {
    expected_exceptions.insert(canonical_string(exceptional("g6-2")));
    expected_exceptions.insert(canonical_string(exceptional("g6-3")));
  } else if (n == 8) {
    expected_exceptions.insert(canonical_string(exceptional("g8-1")));
  }

  // H_{n,1,3} as the cycle x_1..x_n plus x_1x_4, then one extra chord st
  // with s,t at cycle-distance 2 or 3.
  auto base_edges = cycle_edges(n);
  base_edges.emplace_back(0, 3);
  const Graph base = Graph::from_edges(n, base_edges);

  std::set<std::string> found_exceptions;
  long long candidates = 0;
  for (int s = 0; s < n; ++s) {
    for (int step : {2, 3}) {
      const int t = (s + step) % n;
      if (base.has_edge(s, t)) continue;
      auto edges = base_edges;
      edges.emplace_back(s, t);
      const Graph g = Graph::from_edges(n, edges);
      ++candidates;
      const long long w = wiener(g);
      if (w < w122) continue;
      const std::string canon = canonical_string(g);
      if (w != w122) {
        fail(report, "chord graph exceeds W(H_{n,2,2})");
        add_witness(report, g, w, names, canon);
        continue;
      }
      found_exceptions.insert(canon);
      if (!expected_exceptions.count(canon)) {
        fail(report, "unexpected equality exception");
        add_witness(report, g, w, names, canon);
      }
    }
  }
  if (found_exceptions != expected_exceptions)
    fail(report, "exception set does not match the published one");
  report.metrics["candidates"] = candidates;
  report.metrics["exceptions"] = static_cast<long long>(found_exceptions.size());
  for (const auto& canon : found_exceptions)
    add_witness(report, Graph(), w122, names, canon);
  report.seconds = seconds_since(start);
  return report;
}

ClaimReport verify_family_sweep(int n, char which) {
  const auto start = Clock::now();
  ClaimReport report;
  report.n = n;
  // Names only label failure witnesses; the canonical search behind
  // named_graphs is too slow for the large sparse graphs past n ~ 12.
  const auto names = n <= 12 ? named_graphs(n) : std::map<std::string, std::string>{};
  if (which == 'H') {
    report.claim = "sweep-h";
    if (n < 4) throw std::invalid_argument("H-family sweep requires n >= 4");
    const long long w112 = wiener(theta(n, 1, 2));
    const long long w122 = n >= 5 ? wiener(theta(n, 2, 2)) : 0;
    long long members = 0;
    for (const auto& entry : kTable1) {
      if (entry.n != n) continue;
      const long long w = wiener(theta(entry.n, entry.p, entry.q));
      if (w != entry.w) {
        std::ostringstream note;
        note << theta_name(n, entry.p, entry.q) << ": computed " << w
             << " but the table says " << entry.w;
        fail(report, note.str());
      }
    }
    if (n == 9 || n >= 11) {
      if (!(w122 < w112)) fail(report, "W(H_{n,2,2}) < W(H_{n,1,2}) failed");
      for (int q = 3; q <= n / 2; ++q) {
        ++members;
        const Graph g = script_h_member(n, q);
        const long long w = wiener(g);
        if (!(w < w122)) {
          fail(report, theta_name(n, 1, q) + " not below W(H_{n,2,2})");
          add_witness(report, g, w, names, canonical_string(g));
        }
      }
    }
    report.metrics["swept_members"] = members;
  } else if (which == 'I') {
    report.claim = "sweep-i";
    if (n < 5) throw std::invalid_argument("I-family sweep requires n >= 5");
    const long long w122 = wiener(theta(n, 2, 2));
    const std::string g61_canon = n == 6 ? canonical_string(exceptional("g6-1")) : "";
    long long members = 0, exceptions = 0;
    for (int i = 2; i <= n - 2; ++i) {
      ++members;
      const Graph g = i_chord(n, i);
      const long long w = wiener(g);
      if (w < w122) continue;
      const std::string canon = canonical_string(g);
      if (n == 6 && w == w122 && canon == g61_canon) {
        ++exceptions;
        continue;
      }
      fail(report, "I_n member at i=" + std::to_string(i) +
                       " not below W(H_{n,2,2})");
      add_witness(report, g, w, names, canon);
    }
    if (n == 6 && exceptions == 0)
      fail(report, "the G_6^1 equality exception was not observed");
    report.metrics["swept_members"] = members;
    report.metrics["exceptions"] = exceptions;
  } else {
    throw std::invalid_argument("family sweep selector must be 'H' or 'I'");
  }
  report.seconds = seconds_since(start);
  return report;
}

ClaimReport verify_h22_plus_identity(int min_n, int max_n) {
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = "h22plus-identity";
  report.n = max_n;
  for (int n = std::max(5, min_n); n <= max_n; ++n) {
    const long long via_bfs = wiener(h22_plus(n));
    const long long base = wiener(theta(n, 2, 2));
    if (via_bfs != base - 1)
      fail(report, "W(H_{n,2,2}^+) != W(H_{n,2,2}) - 1 at n=" + std::to_string(n));
    if (n >= 5 && base != closed_form(ClosedFormFamily::H122, n))
      fail(report, "H_{n,2,2} closed form mismatch at n=" + std::to_string(n));
  }
  report.seconds = seconds_since(start);
  return report;
}

ClaimReport verify_implication_sweeps(int n, int workers) {
  if (n < 4 || n > 8)
    throw std::invalid_argument("implication sweeps run over full enumerations for 4 <= n <= 8");
  auto claims = run_enumeration_claims(n, workers);
  for (auto& report : claims.reports)
    if (report.claim == "implications") return std::move(report);
  throw std::logic_error("implication report missing");
}

ClaimReport report_tier_outlook(int n, int workers) {
  auto claims = run_enumeration_claims(n, workers);
  for (auto& report : claims.reports)
    if (report.claim == "tier45") return std::move(report);
  throw std::logic_error("tier-outlook report missing");
}

ClaimReport verify_ordering_spot(int n, bool extended, int workers) {
  if (extended) {
    ClaimReport report = verify_top_tiers(n, workers);
    report.claim = "ordering-spot";
    report.notes.push_back("evidence level: full isomorph-free enumeration");
    return report;
  }
  const auto start = Clock::now();
  ClaimReport report;
  report.claim = "ordering-spot";
  report.n = n;
  const long long wc = closed_form(ClosedFormFamily::Cycle, n);
  const long long w112 = closed_form(ClosedFormFamily::H112, n);
  const long long w122 = closed_form(ClosedFormFamily::H122, n);
  const long long w113 = closed_form(ClosedFormFamily::H113, n);
  report.metrics["W(C_n)"] = wc;
  report.metrics["W(H_{n,1,2})"] = w112;
  report.metrics["W(H_{n,2,2})"] = w122;
  report.metrics["W(H_{n,1,3})"] = w113;
  if (!(w122 < w112 && w112 < wc))
    fail(report, "closed-form chain W(H_{n,2,2}) < W(H_{n,1,2}) < W(C_n) failed");
  if (!(w113 < w122))
    fail(report, "closed-form W(H_{n,1,3}) < W(H_{n,2,2}) failed");
  for (char which : {'H', 'I'}) {
    const ClaimReport sweep = verify_family_sweep(n, which);
    if (sweep.status == ClaimStatus::Fail) {
      fail(report, std::string("family sweep '") + which + "' failed");
      for (const auto& note : sweep.notes) report.notes.push_back("  " + note);
    }
  }
  report.notes.push_back(
      "evidence level: closed-form inequalities plus the H- and I-family "
      "sweeps (no exhaustive enumeration)");
  report.seconds = seconds_since(start);
  return report;
}

std::string report_to_json(const ClaimReport& report) {
  nlohmann::json j;
  j["claim"] = report.claim;
  j["n"] = report.n;
  j["status"] = status_name(report.status);
  j["informational"] = report.informational;
  j["seconds"] = report.seconds;
  j["notes"] = report.notes;
  j["metrics"] = report.metrics;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& witness : report.witnesses)
    j["witnesses"].push_back({{"graph6", witness.graph6},
                              {"wiener", witness.wiener},
                              {"family", witness.family}});
  return j.dump();
}

std::string report_to_text(const ClaimReport& report) {
  std::ostringstream out;
  out << (report.informational ? "info " : "") << status_name(report.status)
      << "  " << report.claim;
  if (report.n > 0) out << " (n=" << report.n << ")";
  for (const auto& [key, value] : report.metrics)
    out << "  " << key << "=" << value;
  for (const auto& note : report.notes) out << "\n    note: " << note;
  for (const auto& witness : report.witnesses) {
    out << "\n    witness: " << witness.graph6 << "  W=" << witness.wiener;
    if (!witness.family.empty()) out << "  [" << witness.family << "]";
  }
  return out.str();
}

}  // namespace wienerlab
