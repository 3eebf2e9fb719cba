#ifndef FFARANK_GLICKO_H_
#define FFARANK_GLICKO_H_

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffarank/core.h"

namespace ffarank {

struct GlickoConfig {
  double initial_mu = 1500.0;
  double initial_sigma = 350.0;
  double q = 0.0057565;  // ln(10) / 400

  void Validate() const;
};

// Raised when a win probability of exactly 0 or 1 would make d^2 infinite.
class DegenerateProbabilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// g(sigma) = 1 / sqrt(1 + 3 q^2 sigma^2 / pi^2). g(0) = 1, decreasing.
double GlickoG(double sigma, double q);

// Same as GlickoG but takes sigma^2, avoiding a sqrt round trip.
double GlickoGFromVariance(double variance, double q);

// (1 + 10^(-g(sqrt(s_i^2 + s_j^2)) (mu_i - mu_j) / 400))^-1.
double GlickoWinProbability(const Rating& r_i, const Rating& r_j, double q);

// Pairwise Glicko probabilities of player `i` summed and divided by N choose 2.
double GlickoFfaWinProbability(std::span<const Rating> ratings, std::size_t i,
                               double q);

// d^2 = [q^2 g^2 p (1 - p)]^-1.
double GlickoDSquared(double p_win, double g_opp, double q);

// Simultaneous free-for-all update from pre-match ratings. The opponent
// deviation for player i is the root mean square of the other players'
// sigmas.
std::vector<Rating> GlickoFfaUpdate(std::span<const Rating> ratings,
                                    std::span<const int> observed_ranks,
                                    const GlickoConfig& cfg);

// Two-player Glicko update without draws. Returns {winner', loser'}.
std::pair<Rating, Rating> GlickoHeadToHeadUpdate(const Rating& winner,
                                                 const Rating& loser,
                                                 const GlickoConfig& cfg);

}  // namespace ffarank

#endif  // FFARANK_GLICKO_H_
