#include "ffarank/elo.h"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace ffarank {
namespace {

constexpr double kTol = 1e-9;

TEST(EloTest, WinProbability) {
  EXPECT_DOUBLE_EQ(EloWinProbability(1500, 1500, 400), 0.5);
  // 1 / (1 + e^-1), mpmath
  EXPECT_NEAR(EloWinProbability(1900, 1500, 400), 0.73105857863000487925, kTol);
  EXPECT_NEAR(EloWinProbability(1500, 1900, 400), 1 - 0.73105857863000487925, kTol);
  EXPECT_NEAR(EloWinProbability(1723, 1411, 400) + EloWinProbability(1411, 1723, 400), 1.0,
              1e-15);
  EXPECT_THROW(EloWinProbability(NAN, 1500, 400), std::invalid_argument);
  EXPECT_THROW(EloWinProbability(1500, INFINITY, 400), std::invalid_argument);
  EXPECT_THROW(EloWinProbability(1500, 1500, 0), std::invalid_argument);
}

TEST(EloTest, FfaWinProbability) {
  const std::vector<double> equal(4, 1500.0);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(EloFfaWinProbability(equal, i, 400), 0.25, kTol);

  const std::vector<double> two{1900, 1500};
  EXPECT_EQ(EloFfaWinProbability(two, 0, 400), EloWinProbability(1900, 1500, 400));

  const std::vector<double> field{1500, 1620, 1333, 1711, 1490};
  double sum = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) sum += EloFfaWinProbability(field, i, 400);
  EXPECT_NEAR(sum, 1.0, 1e-12);

  EXPECT_THROW(EloFfaWinProbability(std::vector<double>{1500}, 0, 400), std::invalid_argument);
}

TEST(EloTest, NormalizedObservedResult) {
  EXPECT_EQ(NormalizedObservedResult(5, 5), 0.0);
  EXPECT_NEAR(NormalizedObservedResult(1, 3), 2.0 / 3.0, kTol);
  EXPECT_NEAR(NormalizedObservedResult(2, 3), 1.0 / 3.0, kTol);
  EXPECT_NEAR(NormalizedObservedResult(1, 3) + NormalizedObservedResult(2, 3) +
                  NormalizedObservedResult(3, 3),
              1.0, kTol);
  EXPECT_THROW(NormalizedObservedResult(0, 3), std::out_of_range);
  EXPECT_THROW(NormalizedObservedResult(4, 3), std::out_of_range);
}

TEST(EloTest, FfaUpdateExamples) {
  const EloConfig cfg;
  const auto two = EloFfaUpdate(std::vector{1500.0, 1500.0}, std::vector{1, 2}, cfg);
  EXPECT_NEAR(two[0], 1505.0, kTol);
  EXPECT_NEAR(two[1], 1495.0, kTol);

  const auto three = EloFfaUpdate(std::vector{1500.0, 1500.0, 1500.0}, std::vector{1, 2, 3}, cfg);
  EXPECT_NEAR(three[0] - 1500.0, 10.0 / 3.0, kTol);
  EXPECT_NEAR(three[1] - 1500.0, 0.0, kTol);
  EXPECT_NEAR(three[2] - 1500.0, -10.0 / 3.0, kTol);

  EXPECT_THROW(EloFfaUpdate(std::vector{1500.0, 1500.0}, std::vector{1}, cfg),
               std::invalid_argument);
}

TEST(EloTest, ZeroSumAndTranslationInvariance) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> rating(1500, 200);
  const EloConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 30);
    std::vector<double> mus(n);
    for (auto& m : mus) m = rating(rng);
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    const auto after = EloFfaUpdate(mus, ranks, cfg);
    double delta = 0.0;
    for (int i = 0; i < n; ++i) delta += after[i] - mus[i];
    EXPECT_NEAR(delta, 0.0, 1e-9);

    std::vector<double> shifted = mus;
    for (auto& m : shifted) m += 250.0;
    const auto after_shifted = EloFfaUpdate(shifted, ranks, cfg);
    for (int i = 0; i < n; ++i) {
      EXPECT_NEAR(after_shifted[i] - shifted[i], after[i] - mus[i], 1e-9);
    }
  }
}

TEST(EloTest, HeadToHeadMatchesFfaAtTwoPlayers) {
  const EloConfig cfg;
  const auto [w, l] = EloHeadToHeadUpdate(1612.5, 1544.25, cfg);
  const auto ffa = EloFfaUpdate(std::vector{1612.5, 1544.25}, std::vector{1, 2}, cfg);
  EXPECT_EQ(w, ffa[0]);
  EXPECT_EQ(l, ffa[1]);
}

TEST(EloTest, ConfigValidation) {
  EXPECT_THROW((EloConfig{1500, 0, 400}.Validate()), std::invalid_argument);
  EXPECT_THROW((EloConfig{1500, 10, -1}.Validate()), std::invalid_argument);
  EXPECT_NO_THROW(EloConfig{}.Validate());
}

}  // namespace
}  // namespace ffarank
