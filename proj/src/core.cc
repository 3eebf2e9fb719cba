#include "ffarank/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace ffarank {
namespace {

// True when `ranks` is a permutation of 1..ranks.size().
bool IsPermutation(std::span<const int> ranks) {
  std::vector<char> seen(ranks.size() + 1, 0);
  for (int r : ranks) {
    if (r < 1 || r > static_cast<int>(ranks.size()) || seen[r]) return false;
    seen[r] = 1;
  }
  return true;
}

}  // namespace

PlayerId::PlayerId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw std::invalid_argument("empty player id");
}

void ValidateRating(const Rating& rating) {
  if (!std::isfinite(rating.mu)) {
    throw std::invalid_argument("rating mu must be finite");
  }
  if (rating.sigma && !(*rating.sigma > 0.0 && std::isfinite(*rating.sigma))) {
    throw std::invalid_argument("rating sigma must be positive and finite");
  }
}

void ValidateMatch(const MatchRecord& match) {
  if (match.size() < 2) {
    throw std::invalid_argument("match " + match.match_id +
                                " has fewer than two players");
  }
  std::unordered_set<std::string> players;
  std::vector<int> ranks;
  ranks.reserve(match.entries.size());
  for (const auto& e : match.entries) {
    if (e.player.str().empty()) {
      throw std::invalid_argument("match " + match.match_id +
                                  " has an empty player id");
    }
    if (!players.insert(e.player.str()).second) {
      throw std::invalid_argument("match " + match.match_id +
                                  " lists player " + e.player.str() + " twice");
    }
    ranks.push_back(e.observed_rank);
  }
  if (!IsPermutation(ranks)) {
    throw std::invalid_argument("match " + match.match_id +
                                " observed ranks are not a permutation of 1..N");
  }
}

void ValidateOutcome(const RankOutcome& outcome) {
  std::vector<int> pred, obs;
  pred.reserve(outcome.rows.size());
  obs.reserve(outcome.rows.size());
  for (const auto& row : outcome.rows) {
    pred.push_back(row.predicted_rank);
    obs.push_back(row.observed_rank);
  }
  if (!IsPermutation(pred) || !IsPermutation(obs)) {
    throw std::invalid_argument("outcome " + outcome.match_id +
                                ": rank columns must be permutations of 1..N");
  }
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("outcome " + outcome.match_id +
                                  ": rows must be sorted by predicted rank");
    }
  }
}

std::vector<PredictionError> ErrorsOf(const RankOutcome& outcome) {
  std::vector<PredictionError> errors;
  errors.reserve(outcome.rows.size());
  for (const auto& row : outcome.rows) errors.push_back(ErrorOf(row));
  return errors;
}

RankOutcome MakeOutcome(std::span<const int> predicted,
                        std::span<const int> observed,
                        std::span<const PlayerId> players) {
  if (predicted.size() != observed.size() ||
      (!players.empty() && players.size() != predicted.size())) {
    throw std::invalid_argument("MakeOutcome: column lengths differ");
  }
  RankOutcome outcome;
  outcome.rows.reserve(predicted.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    PlayerId id = players.empty() ? PlayerId("p" + std::to_string(i + 1))
                                  : players[i];
    outcome.rows.push_back({std::move(id), predicted[i], observed[i], false});
  }
  std::sort(outcome.rows.begin(), outcome.rows.end(),
            [](const OutcomeRow& a, const OutcomeRow& b) {
              return a.predicted_rank < b.predicted_rank;
            });
  ValidateOutcome(outcome);
  return outcome;
}

}  // namespace ffarank
