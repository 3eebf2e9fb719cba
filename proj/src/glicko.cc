#include "ffarank/glicko.h"

#include <cmath>
#include <numbers>
#include <string>

#include "ffarank/elo.h"

namespace ffarank {
namespace {

double SigmaOf(const Rating& r) {
  if (!r.sigma) throw std::invalid_argument("Glicko rating is missing sigma");
  return *r.sigma;
}

// Posterior for one player given the aggregate opponent variance, the
// free-for-all win probability and the normalized observed result.
Rating GlickoPosterior(const Rating& r, double opponent_variance, double p_win,
                       double result, double q) {
  const double sigma = SigmaOf(r);
  const double g = GlickoGFromVariance(opponent_variance, q);
  const double d2 = GlickoDSquared(p_win, g, q);
  const double precision = 1.0 / (sigma * sigma) + 1.0 / d2;
  Rating out;
  out.mu = r.mu + q / precision * (g * (result - p_win));
  out.sigma = std::sqrt(1.0 / precision);
  return out;
}

}  // namespace

void GlickoConfig::Validate() const {
  if (!(initial_sigma > 0.0) || !(q > 0.0) || !std::isfinite(initial_mu)) {
    throw std::invalid_argument("Glicko requires sigma0 > 0, q > 0 and a finite initial rating");
  }
}

double GlickoGFromVariance(double variance, double q) {
  if (!(variance >= 0.0)) throw std::invalid_argument("GlickoG: negative sigma");
  constexpr double kPiSquared = std::numbers::pi * std::numbers::pi;
  return 1.0 / std::sqrt(1.0 + 3.0 * q * q * variance / kPiSquared);
}

double GlickoG(double sigma, double q) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("GlickoG: negative sigma");
  return GlickoGFromVariance(sigma * sigma, q);
}

double GlickoWinProbability(const Rating& r_i, const Rating& r_j, double q) {
  const double s_i = SigmaOf(r_i);
  const double s_j = SigmaOf(r_j);
  const double g = GlickoGFromVariance(s_i * s_i + s_j * s_j, q);
  return 1.0 / (1.0 + std::pow(10.0, -g * (r_i.mu - r_j.mu) / 400.0));
}

double GlickoFfaWinProbability(std::span<const Rating> ratings, std::size_t i,
                               double q) {
  const std::size_t n = ratings.size();
  if (n < 2) throw std::invalid_argument("GlickoFfaWinProbability: need N >= 2");
  if (i >= n) throw std::out_of_range("GlickoFfaWinProbability: bad index");
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != i) sum += GlickoWinProbability(ratings[i], ratings[j], q);
  }
  return sum / PairCount(static_cast<int>(n));
}

double GlickoDSquared(double p_win, double g_opp, double q) {
  if (!(p_win > 0.0 && p_win < 1.0)) {
    throw DegenerateProbabilityError("Glicko d^2 undefined for win probability " +
                                     std::to_string(p_win));
  }
  if (!(g_opp > 0.0)) throw std::invalid_argument("GlickoDSquared: g must be > 0");
  return 1.0 / (q * q * g_opp * g_opp * p_win * (1.0 - p_win));
}

std::vector<Rating> GlickoFfaUpdate(std::span<const Rating> ratings,
                                    std::span<const int> observed_ranks,
                                    const GlickoConfig& cfg) {
  if (ratings.size() != observed_ranks.size()) {
    throw std::invalid_argument("GlickoFfaUpdate: ratings and ranks misaligned");
  }
  const int n = static_cast<int>(ratings.size());
  std::vector<Rating> out(ratings.size());
  for (std::size_t i = 0; i < ratings.size(); ++i) {
    double opponent_variance = 0.0;
    for (std::size_t j = 0; j < ratings.size(); ++j) {
      if (j != i) opponent_variance += SigmaOf(ratings[j]) * SigmaOf(ratings[j]);
    }
    opponent_variance /= static_cast<double>(n - 1);
    const double p_win = GlickoFfaWinProbability(ratings, i, cfg.q);
    const double result = NormalizedObservedResult(observed_ranks[i], n);
    out[i] = GlickoPosterior(ratings[i], opponent_variance, p_win, result, cfg.q);
  }
  return out;
}

std::pair<Rating, Rating> GlickoHeadToHeadUpdate(const Rating& winner,
                                                 const Rating& loser,
                                                 const GlickoConfig& cfg) {
  const double s_w = SigmaOf(winner);
  const double s_l = SigmaOf(loser);
  const double p_w = GlickoWinProbability(winner, loser, cfg.q);
  const double p_l = GlickoWinProbability(loser, winner, cfg.q);
  return {GlickoPosterior(winner, s_l * s_l, p_w, 1.0, cfg.q),
          GlickoPosterior(loser, s_w * s_w, p_l, 0.0, cfg.q)};
}

}  // namespace ffarank
