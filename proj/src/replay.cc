#include "ffarank/replay.h"

#include <algorithm>
#include <numeric>

#include "ffarank/random.h"

namespace ffarank {

const PlayerState* RatingStore::Find(const PlayerId& player) const {
  auto it = players_.find(player);
  return it == players_.end() ? nullptr : &it->second;
}

std::vector<std::pair<PlayerId, PlayerState>> RatingStore::Snapshot() const {
  std::vector<std::pair<PlayerId, PlayerState>> out(players_.begin(), players_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RankOutcome PredictMatch(const RatingStore& store, const MatchRecord& match,
                         const RatingSystem& system, std::uint64_t seed) {
  const int n = match.size();
  struct Slot {
    double score;
    int entry;
    bool is_new;
  };
  std::vector<Slot> slots(n);
  for (int i = 0; i < n; ++i) {
    const PlayerState* state = store.Find(match.entries[i].player);
    const Rating rating = state ? state->rating : system.DefaultRating(n);
    slots[i] = {system.SortScore(rating), i, state == nullptr};
  }
  auto by_player = [&](const Slot& a, const Slot& b) {
    return match.entries[a.entry].player < match.entries[b.entry].player;
  };
  std::sort(slots.begin(), slots.end(), [&](const Slot& a, const Slot& b) {
    return a.score != b.score ? a.score > b.score : by_player(a, b);
  });

  std::optional<Rng> rng;
  for (int lo = 0; lo < n;) {
    int hi = lo + 1;
    while (hi < n && slots[hi].score == slots[lo].score) ++hi;
    if (hi - lo > 1) {
      if (!rng) rng.emplace(StreamSeed(seed, match.match_id));
      std::vector<std::pair<std::uint64_t, Slot>> keyed;
      keyed.reserve(hi - lo);
      for (int i = lo; i < hi; ++i) keyed.emplace_back((*rng)(), slots[i]);
      std::sort(keyed.begin(), keyed.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (int i = lo; i < hi; ++i) slots[i] = keyed[i - lo].second;
    }
    lo = hi;
  }

  RankOutcome outcome;
  outcome.match_id = match.match_id;
  outcome.rows.reserve(n);
  for (int pos = 0; pos < n; ++pos) {
    const MatchEntry& e = match.entries[slots[pos].entry];
    outcome.rows.push_back({e.player, pos + 1, e.observed_rank, slots[pos].is_new});
  }
  return outcome;
}

ReplayResult Replay(std::span<const MatchRecord> matches, const RatingSystem& system,
                    const ReplayOptions& options) {
  ReplayResult result;
  result.series.reserve(matches.size());
  if (options.keep_outcomes) result.outcomes.reserve(matches.size());

  std::vector<Rating> before;
  std::vector<int> ranks;
  for (std::size_t m = 0; m < matches.size(); ++m) {
    const MatchRecord& match = matches[m];
    try {
      ValidateMatch(match);
      RankOutcome outcome = PredictMatch(result.store, match, system, options.seed);

      SeriesRow row;
      row.match_index = static_cast<std::int64_t>(m);
      row.match_id = match.match_id;
      row.n_players = match.size();
      int known = 0;
      for (const auto& r : outcome.rows) known += !r.is_new_player;
      row.fraction_known = static_cast<double>(known) / match.size();
      row.metrics = Evaluate(outcome.rows);
      result.series.push_back(std::move(row));

      if (options.history_limit > 0) {
        for (const auto& r : outcome.rows) {
          auto& h = result.histories[r.player];
          if (h.size() < options.history_limit) {
            h.push_back({static_cast<std::int32_t>(m), ErrorOf(r)});
          }
        }
      }

      before.resize(match.entries.size());
      ranks.resize(match.entries.size());
      for (std::size_t i = 0; i < match.entries.size(); ++i) {
        const PlayerState* state = result.store.Find(match.entries[i].player);
        before[i] = state ? state->rating : system.DefaultRating(match.size());
        ranks[i] = match.entries[i].observed_rank;
      }
      const std::vector<Rating> after = system.Update(before, ranks);
      for (std::size_t i = 0; i < match.entries.size(); ++i) {
        PlayerState& state = result.store[match.entries[i].player];
        state.rating = after[i];
        ++state.games_played;
        state.last_observed_rank = ranks[i];
      }
      if (options.keep_outcomes) result.outcomes.push_back(std::move(outcome));
    } catch (const std::exception& e) {
      throw ReplayError("match " + match.match_id + " (index " + std::to_string(m) +
                        "): " + e.what());
    }
  }
  return result;
}

}  // namespace ffarank
