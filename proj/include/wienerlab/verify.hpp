#pragma once

#include <map>
#include <string>
#include <vector>

#include "wienerlab/enumerate.hpp"
#include "wienerlab/graph.hpp"

namespace wienerlab {

enum class ClaimStatus { Pass, Fail, SkippedResource };

struct Witness {
  std::string graph6;
  long long wiener = 0;
  std::string family;  // matched named construction, empty if none
};

struct ClaimReport {
  std::string claim;
  int n = 0;
  ClaimStatus status = ClaimStatus::Pass;
  bool informational = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;
  std::map<std::string, long long> metrics;
  double seconds = 0.0;

  bool ok() const { return informational || status != ClaimStatus::Fail; }
};

struct RankingEntry {
  int rank = 0;  // dense ranking over distinct Wiener values, ties share
  std::string graph6;
  long long wiener = 0;
  std::string family;
};

// Bounded accumulator: the top max_tiers distinct Wiener values, with up
// to kTierMemberCap canonical strings per tier plus an exact member count.
class TierTable {
 public:
  static constexpr std::size_t kTierMemberCap = 64;

  explicit TierTable(int max_tiers) : max_tiers_(max_tiers) {}

  void add(long long w, const std::string& canon);

  struct Tier {
    long long wiener;
    std::vector<std::string> members;  // sorted, possibly truncated
    std::uint64_t member_count;
  };
  std::vector<Tier> tiers() const;  // descending Wiener

 private:
  int max_tiers_;
  std::map<long long, std::pair<std::vector<std::string>, std::uint64_t>,
           std::greater<>>
      tiers_;
};

// Canonical string -> display name for every named construction of order n
// (cycle, complete, all theta parameters, exceptional graphs, H_{n,2,2}+,
// I_n members).
std::map<std::string, std::string> named_graphs(int n);

std::vector<RankingEntry> rank_by_wiener(const EnumerationConfig& cfg, int top_k);
std::vector<RankingEntry> tiers_to_ranking(const TierTable& table, int top_k,
                                           const std::map<std::string, std::string>& names);

// One shared enumeration pass producing the per-n claim reports:
// unique-max (unique maximizer), top-tiers (tier structure), counts (golden
// class counts), transmission-bound, and for n <= 8 the implication sweeps, plus
// the informational 4th/5th-tier report.
struct EnumerationClaims {
  std::vector<ClaimReport> reports;
  StreamStats stats;
};
EnumerationClaims run_enumeration_claims(int n, int workers);

// Individual claim entry points (each runs its own pass where needed).
ClaimReport verify_table1();
ClaimReport verify_table2(int max_n = 200);
ClaimReport verify_top_tiers(int n, int workers = 1);
ClaimReport verify_chord_cases(int n);
ClaimReport verify_family_sweep(int n, char which);  // 'H' or 'I'
ClaimReport verify_h22_plus_identity(int min_n = 5, int max_n = 50);
ClaimReport verify_implication_sweeps(int n, int workers = 1);
ClaimReport report_tier_outlook(int n, int workers = 1);
// Full ordering at one n: closed-form inequalities plus family sweeps, or the
// full enumeration when extended is set; the report records which.
ClaimReport verify_ordering_spot(int n = 11, bool extended = false, int workers = 1);

std::string report_to_json(const ClaimReport& report);
std::string report_to_text(const ClaimReport& report);

}  // namespace wienerlab
