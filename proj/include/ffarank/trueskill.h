#ifndef FFARANK_TRUESKILL_H_
#define FFARANK_TRUESKILL_H_

#include <span>
#include <utility>
#include <vector>

#include "ffarank/core.h"

namespace ffarank {

enum class TrueSkillSchedule {
  // Expectation propagation over the chain of consecutive finishers,
  // iterated to convergence.
  kExpectationPropagation,
  // One pass of two-player updates down the finishing order.
  kSequentialPairwise,
};

struct TrueSkillConfig {
  double initial_mu = 25.0;
  double initial_sigma = 8.333;
  double beta = 4.16;
  double tau = 0.833;  // dynamics: tau^2 is added to sigma^2 before each match
  double draw_probability = 0.0;
  TrueSkillSchedule schedule = TrueSkillSchedule::kExpectationPropagation;
  int max_sweeps = 100;
  double tolerance = 1e-6;  // on the largest change of any performance mean

  void Validate() const;
};

double StandardNormalPdf(double x);
double StandardNormalCdf(double x);

// Additive mean correction for a win: N(x) / Phi(x).
double TrueSkillV(double x);
// Multiplicative variance correction for a win: v(x) (v(x) + x), in (0, 1).
double TrueSkillW(double x);

// Two-player update with dynamics. Returns {winner', loser'}.
std::pair<Rating, Rating> TrueSkillPairwiseUpdate(const Rating& winner,
                                                  const Rating& loser,
                                                  const TrueSkillConfig& cfg);

// N-player update from an observed finishing order; ranks must be a
// permutation of 1..N.
std::vector<Rating> TrueSkillFfaUpdate(std::span<const Rating> ratings,
                                       std::span<const int> observed_ranks,
                                       const TrueSkillConfig& cfg);

}  // namespace ffarank

#endif  // FFARANK_TRUESKILL_H_
