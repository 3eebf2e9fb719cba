#ifndef FFARANK_REPLAY_H_
#define FFARANK_REPLAY_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ffarank/core.h"
#include "ffarank/metrics.h"
#include "ffarank/rating_system.h"

namespace ffarank {

struct PlayerState {
  Rating rating;
  int games_played = 0;
  std::optional<int> last_observed_rank;

  friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

// Player id -> state. A player is absent until their first match.
class RatingStore {
 public:
  const PlayerState* Find(const PlayerId& player) const;
  PlayerState& operator[](const PlayerId& player) { return players_[player]; }
  void Set(const PlayerId& player, PlayerState state) { players_[player] = std::move(state); }

  std::size_t size() const { return players_.size(); }
  bool empty() const { return players_.empty(); }

  // Entries sorted by player id.
  std::vector<std::pair<PlayerId, PlayerState>> Snapshot() const;

 private:
  std::unordered_map<PlayerId, PlayerState, PlayerIdHash> players_;
};

// Sorts the match's players by the system's score (new players get the
// default rating). Ties are ordered by a shuffle seeded from
// (seed, match_id); distinct scores consume no randomness. Only the set of
// players and their stored ratings matter: entry order and observed ranks
// do not influence the prediction.
RankOutcome PredictMatch(const RatingStore& store, const MatchRecord& match,
                         const RatingSystem& system, std::uint64_t seed);

struct SeriesRow {
  std::int64_t match_index = 0;
  std::string match_id;
  int n_players = 0;
  double fraction_known = 0.0;
  MetricValues metrics{};
};

using MetricSeries = std::vector<SeriesRow>;

// One game of a player's history: the match (index into the series) and
// the player's prediction error in it.
struct Appearance {
  std::int32_t match_index;
  std::int32_t error;
};

using PlayerHistories =
    std::unordered_map<PlayerId, std::vector<Appearance>, PlayerIdHash>;

struct ReplayOptions {
  std::uint64_t seed = 0;
  // Appearances kept per player (their first `history_limit` games).
  std::size_t history_limit = std::numeric_limits<std::size_t>::max();
  bool keep_outcomes = false;
};

struct ReplayResult {
  MetricSeries series;
  RatingStore store;
  PlayerHistories histories;
  std::vector<RankOutcome> outcomes;  // only with keep_outcomes
};

// Failure while replaying a specific match.
class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chronological replay: for each match predict from the pre-match store,
// evaluate the six metrics, then apply the system's update.
ReplayResult Replay(std::span<const MatchRecord> matches, const RatingSystem& system,
                    const ReplayOptions& options = {});

}  // namespace ffarank

#endif  // FFARANK_REPLAY_H_
