#ifndef FFARANK_ELO_H_
#define FFARANK_ELO_H_

#include <span>
#include <utility>
#include <vector>

namespace ffarank {

struct EloConfig {
  double initial_mu = 1500.0;
  double k = 10.0;
  double d = 400.0;

  void Validate() const;
};

// Probability that a player rated `mu_i` beats one rated `mu_j`:
// 1 / (1 + e^((mu_j - mu_i) / d)).
double EloWinProbability(double mu_i, double mu_j, double d);

// Free-for-all win probability of player `i`: the sum of its head-to-head
// win probabilities against every other player, divided by N choose 2.
// Summed over the field this is exactly 1.
double EloFfaWinProbability(std::span<const double> mus, std::size_t i,
                            double d);

// (N - observed_rank) / (N choose 2). Sums to 1 over a full permutation.
double NormalizedObservedResult(int observed_rank, int n);

// mu_i + K * (R'_i - Pr(i wins, F)) for every player, computed from the
// pre-match ratings. Rating changes sum to zero.
std::vector<double> EloFfaUpdate(std::span<const double> mus,
                                 std::span<const int> observed_ranks,
                                 const EloConfig& cfg);

// Classic two-player Elo (no draws). Returns {winner', loser'}.
std::pair<double, double> EloHeadToHeadUpdate(double winner_mu, double loser_mu,
                                              const EloConfig& cfg);

}  // namespace ffarank

#endif  // FFARANK_ELO_H_
