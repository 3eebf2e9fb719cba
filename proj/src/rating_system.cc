#include "ffarank/rating_system.h"

#include <stdexcept>

namespace ffarank {
namespace {

class EloSystem final : public RatingSystem {
 public:
  explicit EloSystem(const EloConfig& cfg) : cfg_(cfg) { cfg_.Validate(); }

  SystemKind kind() const override { return SystemKind::kElo; }
  Rating DefaultRating(int) const override { return {cfg_.initial_mu, std::nullopt}; }
  double SortScore(const Rating& r) const override { return r.mu; }

  std::vector<Rating> Update(std::span<const Rating> ratings,
                             std::span<const int> observed_ranks) const override {
    std::vector<double> mus(ratings.size());
    for (std::size_t i = 0; i < ratings.size(); ++i) mus[i] = ratings[i].mu;
    const std::vector<double> updated = EloFfaUpdate(mus, observed_ranks, cfg_);
    std::vector<Rating> out(ratings.size());
    for (std::size_t i = 0; i < ratings.size(); ++i) out[i] = {updated[i], std::nullopt};
    return out;
  }

 private:
  EloConfig cfg_;
};

class GlickoSystem final : public RatingSystem {
 public:
  explicit GlickoSystem(const GlickoConfig& cfg) : cfg_(cfg) { cfg_.Validate(); }

  SystemKind kind() const override { return SystemKind::kGlicko; }
  Rating DefaultRating(int) const override {
    return {cfg_.initial_mu, cfg_.initial_sigma};
  }
  double SortScore(const Rating& r) const override { return r.mu; }

  std::vector<Rating> Update(std::span<const Rating> ratings,
                             std::span<const int> observed_ranks) const override {
    return GlickoFfaUpdate(ratings, observed_ranks, cfg_);
  }

 private:
  GlickoConfig cfg_;
};

class TrueSkillSystem final : public RatingSystem {
 public:
  explicit TrueSkillSystem(const TrueSkillConfig& cfg) : cfg_(cfg) { cfg_.Validate(); }

  SystemKind kind() const override { return SystemKind::kTrueSkill; }
  Rating DefaultRating(int) const override {
    return {cfg_.initial_mu, cfg_.initial_sigma};
  }
  double SortScore(const Rating& r) const override { return r.mu; }

  std::vector<Rating> Update(std::span<const Rating> ratings,
                             std::span<const int> observed_ranks) const override {
    return TrueSkillFfaUpdate(ratings, observed_ranks, cfg_);
  }

 private:
  TrueSkillConfig cfg_;
};

// mu holds the predicted rank; lower is better.
class PreviousRankSystem final : public RatingSystem {
 public:
  SystemKind kind() const override { return SystemKind::kPreviousRank; }
  Rating DefaultRating(int field_size) const override {
    return {PreviousRankPredict(std::nullopt, field_size), std::nullopt};
  }
  double SortScore(const Rating& r) const override { return -r.mu; }

  std::vector<Rating> Update(std::span<const Rating> ratings,
                             std::span<const int> observed_ranks) const override {
    if (ratings.size() != observed_ranks.size()) {
      throw std::invalid_argument("PreviousRank: ratings and ranks misaligned");
    }
    std::vector<Rating> out(ratings.size());
    for (std::size_t i = 0; i < ratings.size(); ++i) {
      out[i] = {static_cast<double>(observed_ranks[i]), std::nullopt};
    }
    return out;
  }
};

}  // namespace

std::string_view SystemName(SystemKind kind) {
  switch (kind) {
    case SystemKind::kElo: return "elo";
    case SystemKind::kGlicko: return "glicko";
    case SystemKind::kTrueSkill: return "trueskill";
    case SystemKind::kPreviousRank: return "previous_rank";
  }
  return "unknown";
}

std::optional<SystemKind> ParseSystemKind(std::string_view name) {
  for (SystemKind k : kAllSystems) {
    if (SystemName(k) == name) return k;
  }
  return std::nullopt;
}

double PreviousRankPredict(std::optional<int> history_rank, int n) {
  if (n < 2) throw std::invalid_argument("PreviousRankPredict: need N >= 2");
  if (history_rank) return static_cast<double>(*history_rank);
  return static_cast<double>(n) / 2.0;
}

std::unique_ptr<RatingSystem> MakeRatingSystem(SystemKind kind,
                                               const SystemConfig& cfg) {
  switch (kind) {
    case SystemKind::kElo: return std::make_unique<EloSystem>(cfg.elo);
    case SystemKind::kGlicko: return std::make_unique<GlickoSystem>(cfg.glicko);
    case SystemKind::kTrueSkill: return std::make_unique<TrueSkillSystem>(cfg.trueskill);
    case SystemKind::kPreviousRank: return std::make_unique<PreviousRankSystem>();
  }
  throw std::invalid_argument("unknown rating system");
}

}  // namespace ffarank
