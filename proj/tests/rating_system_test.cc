#include "ffarank/rating_system.h"

#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

namespace ffarank {
namespace {

TEST(RatingSystemTest, PreviousRankPredict) {
  EXPECT_EQ(PreviousRankPredict(7, 100), 7.0);
  EXPECT_EQ(PreviousRankPredict(std::nullopt, 100), 50.0);
  EXPECT_EQ(PreviousRankPredict(std::nullopt, 3), 1.5);
  EXPECT_THROW(PreviousRankPredict(std::nullopt, 1), std::invalid_argument);
}

TEST(RatingSystemTest, NamesRoundTrip) {
  for (SystemKind kind : kAllSystems) {
    EXPECT_EQ(ParseSystemKind(SystemName(kind)), kind);
    EXPECT_EQ(MakeRatingSystem(kind)->kind(), kind);
  }
  EXPECT_EQ(ParseSystemKind("glicko2"), std::nullopt);
}

TEST(RatingSystemTest, DefaultsMirrorPublishedHyperparameters) {
  EXPECT_EQ(MakeRatingSystem(SystemKind::kElo)->DefaultRating(10), (Rating{1500, std::nullopt}));
  EXPECT_EQ(MakeRatingSystem(SystemKind::kGlicko)->DefaultRating(10), (Rating{1500, 350.0}));
  EXPECT_EQ(MakeRatingSystem(SystemKind::kTrueSkill)->DefaultRating(10), (Rating{25, 8.333}));
  // A new PreviousRank player is predicted at N/2; lower rank sorts first.
  const auto prev = MakeRatingSystem(SystemKind::kPreviousRank);
  EXPECT_EQ(prev->DefaultRating(100).mu, 50.0);
  EXPECT_GT(prev->SortScore({3, std::nullopt}), prev->SortScore({7, std::nullopt}));
}

TEST(RatingSystemTest, PreviousRankUpdateRecordsObservedRank) {
  const auto prev = MakeRatingSystem(SystemKind::kPreviousRank);
  const std::vector<Rating> before{{5, std::nullopt}, {1.5, std::nullopt}, {2, std::nullopt}};
  const auto after = prev->Update(before, std::vector{2, 3, 1});
  EXPECT_EQ(after[0].mu, 2.0);
  EXPECT_EQ(after[1].mu, 3.0);
  EXPECT_EQ(after[2].mu, 1.0);
}

// Permuting the input list permutes the output identically.
TEST(RatingSystemTest, OrderEquivariance) {
  std::mt19937_64 rng(99);
  for (SystemKind kind : kAllSystems) {
    const auto system = MakeRatingSystem(kind);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 15);
      std::vector<Rating> ratings(n);
      for (auto& r : ratings) {
        r = system->DefaultRating(n);
        r.mu += std::uniform_real_distribution<double>(-5, 5)(rng);
      }
      const auto ranks = oracle::RandomPermutation(n, rng);
      const auto perm = oracle::RandomPermutation(n, rng);
      std::vector<Rating> pr(n);
      std::vector<int> pk(n);
      for (int i = 0; i < n; ++i) {
        pr[i] = ratings[perm[i] - 1];
        pk[i] = ranks[perm[i] - 1];
      }
      const auto a = system->Update(ratings, ranks);
      const auto b = system->Update(pr, pk);
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(b[i].mu, a[perm[i] - 1].mu, 1e-9) << SystemName(kind);
        if (a[perm[i] - 1].sigma) EXPECT_NEAR(*b[i].sigma, *a[perm[i] - 1].sigma, 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace ffarank
