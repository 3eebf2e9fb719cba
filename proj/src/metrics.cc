#include "ffarank/metrics.h"

#include <cmath>
#include <limits>

namespace ffarank {
namespace {

std::vector<PredictionError> RowErrors(std::span<const OutcomeRow> rows) {
  std::vector<PredictionError> errors(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) errors[i] = ErrorOf(rows[i]);
  return errors;
}

// Counts inversions of `v` by merge sort; `v` is sorted on return.
long long CountInversions(std::vector<int>& v, std::vector<int>& scratch,
                          std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long count = CountInversions(v, scratch, lo, mid) +
                    CountInversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<long long>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  for (std::size_t t = lo; t < hi; ++t) v[t] = scratch[t];
  return count;
}

}  // namespace

std::string_view MetricName(Metric metric) {
  switch (metric) {
    case Metric::kAccuracy: return "accuracy";
    case Metric::kMae: return "mae";
    case Metric::kKendallTau: return "kendall_tau";
    case Metric::kMrr: return "mrr";
    case Metric::kAveragePrecision: return "ap";
    case Metric::kNdcg: return "ndcg";
  }
  return "unknown";
}

NdcgWeighting NdcgWeighting::Log2() {
  return {[](int position) { return 1.0 / std::log2(position + 1.0); }};
}

double AccuracyFromErrors(std::span<const PredictionError> errors) {
  int hits = 0;
  for (PredictionError e : errors) hits += (e == 0);
  return static_cast<double>(hits) / static_cast<double>(errors.size());
}

double MaeFromErrors(std::span<const PredictionError> errors) {
  double sum = 0.0;
  for (PredictionError e : errors) sum += e;
  return sum / static_cast<double>(errors.size());
}

double MrrFromErrors(std::span<const PredictionError> errors) {
  double sum = 0.0;
  for (PredictionError e : errors) sum += Relevance(e);
  return sum / static_cast<double>(errors.size());
}

double AveragePrecisionFromErrors(std::span<const PredictionError> errors,
                                  int hit_threshold) {
  double sum = 0.0;
  int hits = 0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    hits += (errors[i] <= hit_threshold);
    const double precision = static_cast<double>(hits) / static_cast<double>(i + 1);
    sum += precision * Relevance(errors[i]);
  }
  return sum / static_cast<double>(errors.size());
}

double NdcgFromErrors(std::span<const PredictionError> errors,
                      const NdcgWeighting& weighting) {
  double dcg = 0.0, idcg = 0.0;
  for (std::size_t i = 0; i < errors.size(); ++i) {
    const double w = weighting(static_cast<int>(i) + 1);
    dcg += w * Relevance(errors[i]);
    idcg += w;
  }
  return dcg / idcg;
}

double KendallTau(std::span<const OutcomeRow> rows) {
  const std::size_t n = rows.size();
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  std::vector<int> observed(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) observed[i] = rows[i].observed_rank;
  const double discordant = static_cast<double>(CountInversions(observed, scratch, 0, n));
  const double pairs = PairCount(static_cast<int>(n));
  return (pairs - 2.0 * discordant) / pairs;
}

double Accuracy(std::span<const OutcomeRow> rows) { return AccuracyFromErrors(RowErrors(rows)); }
double Mae(std::span<const OutcomeRow> rows) { return MaeFromErrors(RowErrors(rows)); }
double Mrr(std::span<const OutcomeRow> rows) { return MrrFromErrors(RowErrors(rows)); }

double AveragePrecision(std::span<const OutcomeRow> rows, int hit_threshold) {
  return AveragePrecisionFromErrors(RowErrors(rows), hit_threshold);
}

double Ndcg(std::span<const OutcomeRow> rows, const NdcgWeighting& weighting) {
  return NdcgFromErrors(RowErrors(rows), weighting);
}

MetricValues Evaluate(std::span<const OutcomeRow> rows) {
  const std::vector<PredictionError> errors = RowErrors(rows);
  MetricValues v;
  v[static_cast<int>(Metric::kAccuracy)] = AccuracyFromErrors(errors);
  v[static_cast<int>(Metric::kMae)] = MaeFromErrors(errors);
  v[static_cast<int>(Metric::kKendallTau)] = KendallTau(rows);
  v[static_cast<int>(Metric::kMrr)] = MrrFromErrors(errors);
  v[static_cast<int>(Metric::kAveragePrecision)] = AveragePrecisionFromErrors(errors);
  v[static_cast<int>(Metric::kNdcg)] = NdcgFromErrors(errors);
  return v;
}

std::vector<MetricValue> EvaluateAll(const RankOutcome& outcome) {
  const MetricValues v = Evaluate(outcome.rows);
  std::vector<MetricValue> out;
  out.reserve(kNumMetrics);
  for (Metric m : kAllMetrics) out.push_back({m, v[static_cast<int>(m)]});
  return out;
}

std::vector<MetricValues> EvaluateBatchSerial(std::span<const RankOutcome> outcomes) {
  std::vector<MetricValues> out(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) out[i] = Evaluate(outcomes[i].rows);
  return out;
}

std::vector<MetricValues> EvaluateBatch(std::span<const RankOutcome> outcomes) {
  std::vector<MetricValues> out(outcomes.size());
  const auto n = static_cast<std::ptrdiff_t>(outcomes.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = Evaluate(outcomes[i].rows);
  return out;
}

}  // namespace ffarank
