#ifndef FFARANK_SYNTH_H_
#define FFARANK_SYNTH_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "ffarank/core.h"

namespace ffarank {

// Latent-skill match stream. Each match draws its non-newcomer players
// uniformly without replacement from the current population; a newcomer is
// a fresh player created on the spot who then joins the population.
struct SynthConfig {
  int n_players = 1000;  // initial population
  int n_matches = 1000;
  int players_per_match = 10;
  double latent_skill_sd = 1.0;
  double performance_noise_sd = 1.0;  // 0 means ranks follow skill exactly
  double new_player_rate = 0.0;       // per-slot newcomer probability
  std::uint64_t seed = 0;
  // From match `injection_start` on, round(injection_fraction * N) slots of
  // every match are newcomers (replacing the per-slot rate).
  int injection_start = std::numeric_limits<int>::max();
  double injection_fraction = 0.0;

  // Throws std::invalid_argument for an infeasible configuration.
  void Validate() const;
};

struct LatentSkill {
  PlayerId player;
  double skill;
};

struct SyntheticData {
  std::vector<MatchRecord> matches;
  std::vector<LatentSkill> latent;  // every player ever created
};

// Deterministic given cfg.seed. Observed rank orders players by
// latent skill + N(0, performance_noise_sd), best first.
SyntheticData GenerateSynthetic(const SynthConfig& cfg);

// player_id,latent_skill
void WriteLatentTable(std::ostream& out, std::span<const LatentSkill> latent,
                      char delimiter = ',');

}  // namespace ffarank

#endif  // FFARANK_SYNTH_H_
