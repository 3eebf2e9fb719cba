#ifndef FFARANK_METRICS_H_
#define FFARANK_METRICS_H_

#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ffarank/core.h"

namespace ffarank {

enum class Metric { kAccuracy, kMae, kKendallTau, kMrr, kAveragePrecision, kNdcg };

inline constexpr int kNumMetrics = 6;
inline constexpr Metric kAllMetrics[kNumMetrics] = {
    Metric::kAccuracy, Metric::kMae,              Metric::kKendallTau,
    Metric::kMrr,      Metric::kAveragePrecision, Metric::kNdcg};

// "accuracy", "mae", "kendall_tau", "mrr", "ap", "ndcg".
std::string_view MetricName(Metric metric);

struct MetricValue {
  Metric name;
  double value;
};

// All six metrics indexed by static_cast<int>(Metric).
using MetricValues = std::array<double, kNumMetrics>;

// Position discount for NDCG. Position is 1-based.
struct NdcgWeighting {
  std::function<double(int)> discount;

  // 1 / log2(i + 1).
  static NdcgWeighting Log2();
  double operator()(int position) const { return discount(position); }
};

// Graded credit of one prediction: 1 / (1 + error).
inline double Relevance(PredictionError error) {
  return 1.0 / (1.0 + static_cast<double>(error));
}

// Kernels over errors listed in predicted-rank order. Position i of the span
// is position i + 1 of the ranked list.
double AccuracyFromErrors(std::span<const PredictionError> errors);
double MaeFromErrors(std::span<const PredictionError> errors);
double MrrFromErrors(std::span<const PredictionError> errors);
// P(i) is the fraction of positions 1..i whose error is <= hit_threshold.
double AveragePrecisionFromErrors(std::span<const PredictionError> errors,
                                  int hit_threshold = 0);
double NdcgFromErrors(std::span<const PredictionError> errors,
                      const NdcgWeighting& weighting = NdcgWeighting::Log2());

// (n_c - n_d) / (n choose 2), counting discordant pairs as inversions of the
// observed-rank sequence in O(n log n). Rows must be in predicted-rank order.
// Returns NaN for fewer than two rows.
double KendallTau(std::span<const OutcomeRow> rows);

// Outcome-level metrics. Also valid on any subsequence of an outcome's rows
// (the binned analysis), in which case positions are re-indexed 1..|rows|
// and the errors remain those of the full match.
double Accuracy(std::span<const OutcomeRow> rows);
double Mae(std::span<const OutcomeRow> rows);
double Mrr(std::span<const OutcomeRow> rows);
double AveragePrecision(std::span<const OutcomeRow> rows, int hit_threshold = 0);
double Ndcg(std::span<const OutcomeRow> rows,
            const NdcgWeighting& weighting = NdcgWeighting::Log2());

inline double Accuracy(const RankOutcome& o) { return Accuracy(o.rows); }
inline double Mae(const RankOutcome& o) { return Mae(o.rows); }
inline double KendallTau(const RankOutcome& o) { return KendallTau(o.rows); }
inline double Mrr(const RankOutcome& o) { return Mrr(o.rows); }
inline double AveragePrecision(const RankOutcome& o, int hit_threshold = 0) {
  return AveragePrecision(o.rows, hit_threshold);
}
inline double Ndcg(const RankOutcome& o,
                   const NdcgWeighting& weighting = NdcgWeighting::Log2()) {
  return Ndcg(o.rows, weighting);
}

// All six metrics with default parameters.
MetricValues Evaluate(std::span<const OutcomeRow> rows);
std::vector<MetricValue> EvaluateAll(const RankOutcome& outcome);

// Evaluates many outcomes. The parallel version distributes outcomes over
// OpenMP threads and returns exactly what the serial reference returns.
std::vector<MetricValues> EvaluateBatch(std::span<const RankOutcome> outcomes);
std::vector<MetricValues> EvaluateBatchSerial(std::span<const RankOutcome> outcomes);

}  // namespace ffarank

#endif  // FFARANK_METRICS_H_
