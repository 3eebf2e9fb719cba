#ifndef FFARANK_RATING_SYSTEM_H_
#define FFARANK_RATING_SYSTEM_H_

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ffarank/core.h"
#include "ffarank/elo.h"
#include "ffarank/glicko.h"
#include "ffarank/trueskill.h"

namespace ffarank {

enum class SystemKind { kElo, kGlicko, kTrueSkill, kPreviousRank };

inline constexpr SystemKind kAllSystems[] = {SystemKind::kElo, SystemKind::kGlicko,
                                             SystemKind::kTrueSkill,
                                             SystemKind::kPreviousRank};

std::string_view SystemName(SystemKind kind);
// Accepts "elo", "glicko", "trueskill", "previous_rank".
std::optional<SystemKind> ParseSystemKind(std::string_view name);

// Hyperparameters for every system; defaults are the published ones.
struct SystemConfig {
  EloConfig elo;
  GlickoConfig glicko;
  TrueSkillConfig trueskill;
};

// Predicted rank for PreviousRank: the player's rank in their previous
// match, or N / 2 for a new player.
double PreviousRankPredict(std::optional<int> history_rank, int n);

// Uniform facade over the four rating systems. Implementations are
// stateless; the replay owns all player state.
class RatingSystem {
 public:
  virtual ~RatingSystem() = default;

  virtual SystemKind kind() const = 0;
  std::string_view name() const { return SystemName(kind()); }

  // Rating used for a player never seen before in a match of `field_size`.
  virtual Rating DefaultRating(int field_size) const = 0;

  // Higher sorts first when predicting a match.
  virtual double SortScore(const Rating& rating) const = 0;

  // Post-match ratings, aligned with the inputs and computed from the
  // pre-match ratings only.
  virtual std::vector<Rating> Update(std::span<const Rating> ratings,
                                     std::span<const int> observed_ranks) const = 0;
};

std::unique_ptr<RatingSystem> MakeRatingSystem(SystemKind kind,
                                               const SystemConfig& cfg = {});

}  // namespace ffarank

#endif  // FFARANK_RATING_SYSTEM_H_
