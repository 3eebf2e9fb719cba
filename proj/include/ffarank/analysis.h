#ifndef FFARANK_ANALYSIS_H_
#define FFARANK_ANALYSIS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ffarank/core.h"
#include "ffarank/metrics.h"
#include "ffarank/rating_system.h"
#include "ffarank/replay.h"

namespace ffarank {

enum class CohortKind { kAll, kBest, kFrequent, kBinned };

std::string_view CohortKindName(CohortKind kind);  // all_players, best, ...

struct CohortSpec {
  CohortKind kind = CohortKind::kAll;
  int cohort_size = 1000;
  int min_games = 10;  // eligibility: games played strictly greater than this
  int horizon = 10;    // games tracked per member
  int bins = 5;
  std::uint64_t seed = 0;

  static CohortSpec Best() { return {CohortKind::kBest, 1000, 10, 10, 5, 0}; }
  static CohortSpec Frequent() { return {CohortKind::kFrequent, 1000, 100, 100, 5, 0}; }
  static CohortSpec Binned() { return {CohortKind::kBinned, 1000, 0, 0, 5, 0}; }

  void Validate() const;
};

struct PlayerContribution {
  PredictionError error;
  double relevance;
  bool hit;
};

// The player's error, relevance and hit flag in one outcome. Throws
// std::invalid_argument if the player did not take part.
PlayerContribution PerPlayerContribution(const RankOutcome& outcome,
                                         const PlayerId& player);

// Cohort-averaged metric at a member's g-th game. Accuracy, MAE and MRR
// average the member's own hit, error and relevance; tau, AP and NDCG are
// the whole-match values of the match the member played.
struct CurvePoint {
  int game_index;  // 1-based
  Metric metric;
  double mean;
  double stderr_;  // sample standard error; 0 when n < 2
  int n;
};

struct CohortCurves {
  std::vector<PlayerId> members;
  bool undersized = false;  // fewer eligible players than cohort_size
  std::vector<CurvePoint> points;  // ordered by (game_index, metric)
};

// Top cohort_size players by the system's final score among those with
// more than min_games games (ties by player id).
CohortCurves CohortBest(const ReplayResult& replay, const RatingSystem& system,
                        const CohortSpec& spec);

// cohort_size players drawn uniformly (seeded) among those with more than
// min_games games.
CohortCurves CohortFrequent(const ReplayResult& replay, const CohortSpec& spec);

// Curves for an explicit member list.
CohortCurves CohortCurvesFor(const ReplayResult& replay, std::vector<PlayerId> members,
                             int horizon);

// Contiguous observed-rank bins of sizes floor(N/b) or floor(N/b)+1, the
// larger ones first.
std::vector<int> BinSizes(int n, int bins);

struct BinCell {
  double mean = 0.0;
  int n = 0;  // matches contributing (tau needs at least two players in a bin)
};

struct BinTable {
  int bins = 0;
  std::vector<std::array<BinCell, kNumMetrics>> cells;  // [bin][metric]
  std::size_t matches_used = 0;
  std::size_t matches_skipped = 0;  // fewer players than bins
};

// Per-bin restricted metrics averaged over matches. The OpenMP kernel
// evaluates matches in parallel and reduces in match order, so it returns
// exactly the serial reference's table.
BinTable BinnedRanks(std::span<const RankOutcome> outcomes, int bins = 5);
BinTable BinnedRanksSerial(std::span<const RankOutcome> outcomes, int bins = 5);

// Trailing moving average over `window` rows (fewer at the start). A
// window of 0 or 1 returns the series unchanged.
MetricSeries SmoothTrailing(const MetricSeries& series, int window);

}  // namespace ffarank

#endif  // FFARANK_ANALYSIS_H_
