#include "ffarank/analysis.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ffarank/random.h"

namespace ffarank {
namespace {

constexpr int kAcc = static_cast<int>(Metric::kAccuracy);
constexpr int kMae = static_cast<int>(Metric::kMae);
constexpr int kTau = static_cast<int>(Metric::kKendallTau);
constexpr int kMrr = static_cast<int>(Metric::kMrr);
constexpr int kAp = static_cast<int>(Metric::kAveragePrecision);
constexpr int kNdcg = static_cast<int>(Metric::kNdcg);

std::vector<std::pair<PlayerId, const PlayerState*>> Eligible(const RatingStore& store,
                                                              int min_games) {
  std::vector<std::pair<PlayerId, const PlayerState*>> out;
  for (const auto& [id, state] : store.Snapshot()) {
    if (state.games_played > min_games) out.emplace_back(id, store.Find(id));
  }
  return out;
}

// Values of one match restricted to each bin, NaN where undefined.
void EvaluateBins(const RankOutcome& outcome, const std::vector<int>& sizes,
                  std::vector<OutcomeRow>& scratch, double* out) {
  const int bins = static_cast<int>(sizes.size());
  int lo = 1;
  for (int b = 0; b < bins; ++b) {
    const int hi = lo + sizes[b];  // observed ranks [lo, hi)
    scratch.clear();
    for (const auto& row : outcome.rows) {
      if (row.observed_rank >= lo && row.observed_rank < hi) scratch.push_back(row);
    }
    const MetricValues v = Evaluate(scratch);
    std::copy(v.begin(), v.end(), out + b * kNumMetrics);
    lo = hi;
  }
}

void Accumulate(BinTable& table, const double* values) {
  for (int b = 0; b < table.bins; ++b) {
    for (int m = 0; m < kNumMetrics; ++m) {
      const double x = values[b * kNumMetrics + m];
      if (std::isnan(x)) continue;
      table.cells[b][m].mean += x;  // running sum until Finish
      ++table.cells[b][m].n;
    }
  }
}

void Finish(BinTable& table) {
  for (auto& row : table.cells) {
    for (auto& cell : row) {
      if (cell.n > 0) cell.mean /= cell.n;
    }
  }
}

}  // namespace

std::string_view CohortKindName(CohortKind kind) {
  switch (kind) {
    case CohortKind::kAll: return "all_players";
    case CohortKind::kBest: return "best";
    case CohortKind::kFrequent: return "frequent";
    case CohortKind::kBinned: return "binned";
  }
  return "unknown";
}

void CohortSpec::Validate() const {
  if (cohort_size < 1 || min_games < 0 || horizon < 0 || bins < 1) {
    throw std::invalid_argument("cohort spec needs positive cohort size and bins");
  }
}

PlayerContribution PerPlayerContribution(const RankOutcome& outcome,
                                         const PlayerId& player) {
  for (const auto& row : outcome.rows) {
    if (row.player == player) {
      const PredictionError e = ErrorOf(row);
      return {e, Relevance(e), e == 0};
    }
  }
  throw std::invalid_argument("player " + player.str() + " not in outcome " +
                              outcome.match_id);
}

CohortCurves CohortCurvesFor(const ReplayResult& replay, std::vector<PlayerId> members,
                             int horizon) {
  CohortCurves curves;
  curves.members = std::move(members);
  for (int g = 1; g <= horizon; ++g) {
    std::array<double, kNumMetrics> sum{}, sum_sq{};
    int n = 0;
    for (const auto& id : curves.members) {
      auto it = replay.histories.find(id);
      if (it == replay.histories.end() || static_cast<int>(it->second.size()) < g) continue;
      const Appearance& a = it->second[g - 1];
      const MetricValues& match = replay.series.at(a.match_index).metrics;
      MetricValues v = match;
      v[kAcc] = a.error == 0 ? 1.0 : 0.0;
      v[kMae] = a.error;
      v[kMrr] = Relevance(a.error);
      for (int m = 0; m < kNumMetrics; ++m) {
        sum[m] += v[m];
        sum_sq[m] += v[m] * v[m];
      }
      ++n;
    }
    if (n == 0) continue;
    for (Metric metric : kAllMetrics) {
      const int m = static_cast<int>(metric);
      const double mean = sum[m] / n;
      double se = 0.0;
      if (n > 1) {
        const double var = std::max(0.0, (sum_sq[m] - n * mean * mean) / (n - 1));
        se = std::sqrt(var / n);
      }
      curves.points.push_back({g, metric, mean, se, n});
    }
  }
  return curves;
}

CohortCurves CohortBest(const ReplayResult& replay, const RatingSystem& system,
                        const CohortSpec& spec) {
  spec.Validate();
  auto eligible = Eligible(replay.store, spec.min_games);
  std::stable_sort(eligible.begin(), eligible.end(), [&](const auto& a, const auto& b) {
    return system.SortScore(a.second->rating) > system.SortScore(b.second->rating);
  });
  const bool undersized = static_cast<int>(eligible.size()) < spec.cohort_size;
  if (!undersized) eligible.resize(spec.cohort_size);
  std::vector<PlayerId> members;
  for (auto& e : eligible) members.push_back(e.first);
  CohortCurves curves = CohortCurvesFor(replay, std::move(members), spec.horizon);
  curves.undersized = undersized;
  return curves;
}

CohortCurves CohortFrequent(const ReplayResult& replay, const CohortSpec& spec) {
  spec.Validate();
  auto eligible = Eligible(replay.store, spec.min_games);
  Rng rng(StreamSeed(spec.seed, "frequent-cohort"));
  std::vector<std::pair<std::uint64_t, PlayerId>> keyed;
  for (auto& e : eligible) keyed.emplace_back(rng(), e.first);
  std::sort(keyed.begin(), keyed.end());
  const bool undersized = static_cast<int>(keyed.size()) < spec.cohort_size;
  if (!undersized) keyed.resize(spec.cohort_size);
  std::vector<PlayerId> members;
  for (auto& k : keyed) members.push_back(std::move(k.second));
  std::sort(members.begin(), members.end());
  CohortCurves curves = CohortCurvesFor(replay, std::move(members), spec.horizon);
  curves.undersized = undersized;
  return curves;
}

std::vector<int> BinSizes(int n, int bins) {
  if (bins < 1 || n < bins) {
    throw std::invalid_argument("BinSizes: need 1 <= bins <= n");
  }
  std::vector<int> sizes(bins, n / bins);
  for (int b = 0; b < n % bins; ++b) ++sizes[b];
  return sizes;
}

BinTable BinnedRanksSerial(std::span<const RankOutcome> outcomes, int bins) {
  if (bins < 1) throw std::invalid_argument("BinnedRanks: bins must be >= 1");
  BinTable table;
  table.bins = bins;
  table.cells.resize(bins);
  std::vector<OutcomeRow> scratch;
  std::vector<double> values(static_cast<std::size_t>(bins) * kNumMetrics);
  for (const auto& outcome : outcomes) {
    if (outcome.size() < bins) {
      ++table.matches_skipped;
      continue;
    }
    EvaluateBins(outcome, BinSizes(outcome.size(), bins), scratch, values.data());
    Accumulate(table, values.data());
    ++table.matches_used;
  }
  Finish(table);
  return table;
}

BinTable BinnedRanks(std::span<const RankOutcome> outcomes, int bins) {
  if (bins < 1) throw std::invalid_argument("BinnedRanks: bins must be >= 1");
  const std::size_t stride = static_cast<std::size_t>(bins) * kNumMetrics;
  std::vector<double> values(outcomes.size() * stride);
  const auto n = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel
  {
    std::vector<OutcomeRow> scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      if (outcomes[i].size() < bins) continue;
      EvaluateBins(outcomes[i], BinSizes(outcomes[i].size(), bins), scratch,
                   values.data() + i * stride);
    }
  }
  BinTable table;
  table.bins = bins;
  table.cells.resize(bins);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].size() < bins) {
      ++table.matches_skipped;
      continue;
    }
    Accumulate(table, values.data() + i * stride);
    ++table.matches_used;
  }
  Finish(table);
  return table;
}

MetricSeries SmoothTrailing(const MetricSeries& series, int window) {
  if (window <= 1) return series;
  MetricSeries out = series;
  MetricValues running{};
  double fraction_running = 0.0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (int m = 0; m < kNumMetrics; ++m) running[m] += series[i].metrics[m];
    fraction_running += series[i].fraction_known;
    if (i >= static_cast<std::size_t>(window)) {
      for (int m = 0; m < kNumMetrics; ++m) running[m] -= series[i - window].metrics[m];
      fraction_running -= series[i - window].fraction_known;
    }
    const double count = static_cast<double>(std::min<std::size_t>(i + 1, window));
    for (int m = 0; m < kNumMetrics; ++m) out[i].metrics[m] = running[m] / count;
    out[i].fraction_known = fraction_running / count;
  }
  return out;
}

}  // namespace ffarank
