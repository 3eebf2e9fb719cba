#ifndef FFARANK_CORE_H_
#define FFARANK_CORE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffarank {

// Opaque player token as found in the match log. Never empty.
class PlayerId {
 public:
  PlayerId() = default;
  explicit PlayerId(std::string value);

  const std::string& str() const { return value_; }

  friend bool operator==(const PlayerId&, const PlayerId&) = default;
  friend auto operator<=>(const PlayerId&, const PlayerId&) = default;

 private:
  std::string value_;
};

struct PlayerIdHash {
  std::size_t operator()(const PlayerId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

// Skill point estimate. `sigma` is the skill deviation for systems that
// track uncertainty (Glicko, TrueSkill) and is absent otherwise.
struct Rating {
  double mu = 0.0;
  std::optional<double> sigma;

  friend bool operator==(const Rating&, const Rating&) = default;
};

// Throws std::invalid_argument unless mu is finite and sigma (if any) > 0.
void ValidateRating(const Rating& rating);

// Seconds since the Unix epoch.
using Timestamp = std::int64_t;

struct MatchEntry {
  PlayerId player;
  int observed_rank = 0;  // 1 = winner

  friend bool operator==(const MatchEntry&, const MatchEntry&) = default;
};

// One free-for-all match. Observed ranks form a permutation of 1..N, N >= 2.
struct MatchRecord {
  std::string match_id;
  Timestamp timestamp = 0;
  std::vector<MatchEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

// Throws std::invalid_argument when the record breaks a match invariant.
void ValidateMatch(const MatchRecord& match);

struct OutcomeRow {
  PlayerId player;
  int predicted_rank = 0;
  int observed_rank = 0;
  bool is_new_player = false;

  friend bool operator==(const OutcomeRow&, const OutcomeRow&) = default;
};

// Predicted-vs-observed ranks for one match. Rows are sorted by predicted
// rank, so row i is "position i + 1" in every position-weighted metric.
struct RankOutcome {
  std::string match_id;
  std::vector<OutcomeRow> rows;

  int size() const { return static_cast<int>(rows.size()); }

  friend bool operator==(const RankOutcome&, const RankOutcome&) = default;
};

// Throws std::invalid_argument unless both rank columns are permutations of
// 1..N and rows are ordered by predicted rank.
void ValidateOutcome(const RankOutcome& outcome);

// |predicted_rank - observed_rank| for one player; 0 <= value <= N - 1.
using PredictionError = int;

inline PredictionError ErrorOf(const OutcomeRow& row) {
  return row.predicted_rank > row.observed_rank
             ? row.predicted_rank - row.observed_rank
             : row.observed_rank - row.predicted_rank;
}

// Errors in predicted-rank order.
std::vector<PredictionError> ErrorsOf(const RankOutcome& outcome);

// Builds a validated outcome from parallel columns; rows are re-sorted by
// predicted rank. Player ids default to "p1".."pN" when `players` is empty.
RankOutcome MakeOutcome(std::span<const int> predicted,
                        std::span<const int> observed,
                        std::span<const PlayerId> players = {});

// N choose 2 as a double.
inline double PairCount(int n) {
  return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

}  // namespace ffarank

#endif  // FFARANK_CORE_H_
