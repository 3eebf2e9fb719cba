#include "ffarank/trueskill.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffarank {
namespace {

// Below this argument v(x) is taken from the asymptotic Mills-ratio series;
// erfc stays accurate well past it, but Phi(x) underflows near x = -37.
constexpr double kAsymptoticCutoff = -30.0;

double SigmaOf(const Rating& r) {
  if (!r.sigma) throw std::invalid_argument("TrueSkill rating is missing sigma");
  return *r.sigma;
}

// Gaussian in natural parameters: precision and precision-adjusted mean.
struct Gaussian {
  double pi = 0.0;
  double tau = 0.0;

  static Gaussian FromMoments(double mean, double variance) {
    return {1.0 / variance, mean / variance};
  }
  double mean() const { return tau / pi; }
  double variance() const { return 1.0 / pi; }
  bool uniform() const { return pi == 0.0; }

  friend Gaussian operator*(Gaussian a, Gaussian b) {
    return {a.pi + b.pi, a.tau + b.tau};
  }
  friend Gaussian operator/(Gaussian a, Gaussian b) {
    return {a.pi - b.pi, a.tau - b.tau};
  }
};

// Rating with sigma^2 + tau^2 as its variance.
double PriorVariance(const Rating& r, const TrueSkillConfig& cfg) {
  const double s = SigmaOf(r);
  return s * s + cfg.tau * cfg.tau;
}

// Closed-form two-player update on variances that already include dynamics.
void PairwiseInPlace(double& mu_w, double& var_w, double& mu_l, double& var_l,
                     double beta) {
  const double c = std::sqrt(2.0 * beta * beta + var_w + var_l);
  const double x = (mu_w - mu_l) / c;
  const double v = TrueSkillV(x);
  const double w = TrueSkillW(x);
  mu_w += var_w / c * v;
  mu_l -= var_l / c * v;
  var_w *= 1.0 - var_w / (c * c) * w;
  var_l *= 1.0 - var_l / (c * c) * w;
}

std::vector<int> FinishingOrder(std::span<const int> observed_ranks) {
  const int n = static_cast<int>(observed_ranks.size());
  std::vector<int> order(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = observed_ranks[i];
    if (r < 1 || r > n || order[r - 1] != -1) {
      throw std::invalid_argument("TrueSkill: observed ranks must be a permutation of 1..N");
    }
    order[r - 1] = i;
  }
  return order;
}

std::vector<Rating> SequentialPairwise(std::span<const Rating> ratings,
                                       const std::vector<int>& order,
                                       const TrueSkillConfig& cfg) {
  const std::size_t n = ratings.size();
  std::vector<double> mu(n), var(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = ratings[i].mu;
    var[i] = PriorVariance(ratings[i], cfg);
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const int a = order[k];
    const int b = order[k + 1];
    PairwiseInPlace(mu[a], var[a], mu[b], var[b], cfg.beta);
  }
  std::vector<Rating> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = {mu[i], std::sqrt(var[i])};
  return out;
}

// Expectation propagation on the factor graph
//   skill_i -> perf_i = skill_i + N(0, beta^2) -> d_k = perf_(k) - perf_(k+1) > 0
// where perf_(k) is the performance of the k-th finisher.
std::vector<Rating> ChainExpectationPropagation(std::span<const Rating> ratings,
                                                const std::vector<int>& order,
                                                const TrueSkillConfig& cfg) {
  const std::size_t n = ratings.size();
  const double beta2 = cfg.beta * cfg.beta;

  // Indexed by finishing position.
  std::vector<Gaussian> skill_prior(n), perf_prior(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rating& r = ratings[order[k]];
    const double var = PriorVariance(r, cfg);
    skill_prior[k] = Gaussian::FromMoments(r.mu, var);
    perf_prior[k] = Gaussian::FromMoments(r.mu, var + beta2);
  }
  // Messages from difference factor k to its left (better) and right
  // (worse) performance variables.
  std::vector<Gaussian> to_left(n - 1), to_right(n - 1);

  auto marginal = [&](std::size_t k) {
    Gaussian m = perf_prior[k];
    if (k > 0) m = m * to_right[k - 1];
    if (k + 1 < n) m = m * to_left[k];
    return m;
  };

  auto update_factor = [&](std::size_t k) {
    const Gaussian a = marginal(k) / to_left[k];
    const Gaussian b = marginal(k + 1) / to_right[k];
    const double m = a.mean() - b.mean();
    const double v = a.variance() + b.variance();
    const double sv = std::sqrt(v);
    const double x = m / sv;
    const double w = TrueSkillW(x);
    if (!(w > 0.0)) {
      to_left[k] = to_right[k] = Gaussian{};
      return;
    }
    // Message from the truncation to d_k, in moment form.
    const double msg_mean = m + sv * TrueSkillV(x) / w;
    const double msg_var = v * (1.0 - w) / w;
    to_left[k] = Gaussian::FromMoments(msg_mean + b.mean(), msg_var + b.variance());
    to_right[k] = Gaussian::FromMoments(a.mean() - msg_mean, msg_var + a.variance());
  };

  std::vector<double> last_means(n);
  for (std::size_t k = 0; k < n; ++k) last_means[k] = perf_prior[k].mean();
  for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
    for (std::size_t k = 0; k + 1 < n; ++k) update_factor(k);
    for (std::size_t k = n - 2; k-- > 0;) update_factor(k);
    double delta = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mean = marginal(k).mean();
      delta = std::max(delta, std::abs(mean - last_means[k]));
      last_means[k] = mean;
    }
    if (delta < cfg.tolerance) break;
  }

  std::vector<Rating> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Gaussian from_below;
    if (k > 0) from_below = from_below * to_right[k - 1];
    if (k + 1 < n) from_below = from_below * to_left[k];
    Gaussian posterior = skill_prior[k];
    if (!from_below.uniform()) {
      posterior = posterior * Gaussian::FromMoments(
                                  from_below.mean(), from_below.variance() + beta2);
    }
    out[order[k]] = {posterior.mean(), std::sqrt(posterior.variance())};
  }
  return out;
}

}  // namespace

void TrueSkillConfig::Validate() const {
  if (!(beta > 0.0) || !(initial_sigma > 0.0) || !(tau >= 0.0) ||
      !std::isfinite(initial_mu)) {
    throw std::invalid_argument("TrueSkill requires beta > 0, sigma0 > 0, tau >= 0");
  }
  if (draw_probability != 0.0) {
    throw std::invalid_argument("TrueSkill draws are not modeled; draw_probability must be 0");
  }
  if (max_sweeps < 1 || !(tolerance > 0.0)) {
    throw std::invalid_argument("TrueSkill EP needs max_sweeps >= 1 and tolerance > 0");
  }
}

double StandardNormalPdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double StandardNormalCdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double TrueSkillV(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("TrueSkillV: non-finite input");
  if (x < kAsymptoticCutoff) {
    // Phi(-t) / N(t) = (1/t)(1 - 1/t^2 + 3/t^4 - 15/t^6 + 105/t^8 - ...)
    const double t = -x;
    const double u = 1.0 / (t * t);
    const double series = 1.0 - u * (1.0 - u * (3.0 - u * (15.0 - u * 105.0)));
    return t / series;
  }
  return StandardNormalPdf(x) / StandardNormalCdf(x);
}

double TrueSkillW(double x) {
  const double v = TrueSkillV(x);
  return v * (v + x);
}

std::pair<Rating, Rating> TrueSkillPairwiseUpdate(const Rating& winner,
                                                  const Rating& loser,
                                                  const TrueSkillConfig& cfg) {
  double mu_w = winner.mu, mu_l = loser.mu;
  double var_w = PriorVariance(winner, cfg), var_l = PriorVariance(loser, cfg);
  PairwiseInPlace(mu_w, var_w, mu_l, var_l, cfg.beta);
  return {Rating{mu_w, std::sqrt(var_w)}, Rating{mu_l, std::sqrt(var_l)}};
}

std::vector<Rating> TrueSkillFfaUpdate(std::span<const Rating> ratings,
                                       std::span<const int> observed_ranks,
                                       const TrueSkillConfig& cfg) {
  if (ratings.size() != observed_ranks.size()) {
    throw std::invalid_argument("TrueSkillFfaUpdate: ratings and ranks misaligned");
  }
  if (ratings.size() < 2) throw std::invalid_argument("TrueSkillFfaUpdate: need N >= 2");
  const std::vector<int> order = FinishingOrder(observed_ranks);
  if (cfg.schedule == TrueSkillSchedule::kSequentialPairwise) {
    return SequentialPairwise(ratings, order, cfg);
  }
  return ChainExpectationPropagation(ratings, order, cfg);
}

}  // namespace ffarank
