#include "ffarank/elo.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ffarank/core.h"

namespace ffarank {

void EloConfig::Validate() const {
  if (!(k > 0.0) || !(d > 0.0) || !std::isfinite(initial_mu)) {
    throw std::invalid_argument("Elo requires K > 0, D > 0 and a finite initial rating");
  }
}

double EloWinProbability(double mu_i, double mu_j, double d) {
  if (!std::isfinite(mu_i) || !std::isfinite(mu_j) || !std::isfinite(d)) {
    throw std::invalid_argument("EloWinProbability: non-finite input");
  }
  if (!(d > 0.0)) throw std::invalid_argument("EloWinProbability: D must be > 0");
  return 1.0 / (1.0 + std::exp((mu_j - mu_i) / d));
}

double EloFfaWinProbability(std::span<const double> mus, std::size_t i,
                            double d) {
  const std::size_t n = mus.size();
  if (n < 2) throw std::invalid_argument("EloFfaWinProbability: need N >= 2");
  if (i >= n) throw std::out_of_range("EloFfaWinProbability: bad index");
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) sum += EloWinProbability(mus[i], mus[j], d);
  }
  return sum / PairCount(static_cast<int>(n));
}

double NormalizedObservedResult(int observed_rank, int n) {
  if (n < 2) throw std::invalid_argument("NormalizedObservedResult: need N >= 2");
  if (observed_rank < 1 || observed_rank > n) {
    throw std::out_of_range("observed rank " + std::to_string(observed_rank) +
                            " outside 1.." + std::to_string(n));
  }
  return static_cast<double>(n - observed_rank) / PairCount(n);
}

std::vector<double> EloFfaUpdate(std::span<const double> mus,
                                 std::span<const int> observed_ranks,
                                 const EloConfig& cfg) {
  if (mus.size() != observed_ranks.size()) {
    throw std::invalid_argument("EloFfaUpdate: ratings and ranks misaligned");
  }
  const int n = static_cast<int>(mus.size());
  std::vector<double> out(mus.size());
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const double expected = EloFfaWinProbability(mus, i, cfg.d);
    const double actual = NormalizedObservedResult(observed_ranks[i], n);
    out[i] = mus[i] + cfg.k * (actual - expected);
  }
  return out;
}

std::pair<double, double> EloHeadToHeadUpdate(double winner_mu, double loser_mu,
                                              const EloConfig& cfg) {
  const double p_w = EloWinProbability(winner_mu, loser_mu, cfg.d);
  const double p_l = EloWinProbability(loser_mu, winner_mu, cfg.d);
  return {winner_mu + cfg.k * (1.0 - p_w), loser_mu + cfg.k * (0.0 - p_l)};
}

}  // namespace ffarank
