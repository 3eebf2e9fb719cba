#include "ffarank/glicko.h"

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace ffarank {
namespace {

constexpr double kTol = 1e-9;
constexpr double kQ = 0.0057565;

Rating R(double mu, double sigma) { return {mu, sigma}; }

TEST(GlickoTest, GFunction) {
  EXPECT_EQ(GlickoG(0.0, kQ), 1.0);
  EXPECT_NEAR(GlickoG(350.0, kQ), 0.66906700465798309707, kTol);  // mpmath
  EXPECT_GT(GlickoG(100.0, kQ), GlickoG(350.0, kQ));
  EXPECT_THROW(GlickoG(-1.0, kQ), std::invalid_argument);
}

TEST(GlickoTest, WinProbability) {
  EXPECT_EQ(GlickoWinProbability(R(1500, 80), R(1500, 300), kQ), 0.5);
  // g(sqrt(1800)) = 0.991056159..., p = (1 + 10^(-g/2))^-1, mpmath
  EXPECT_NEAR(GlickoWinProbability(R(1700, 30), R(1500, 30), kQ), 0.75786237985381809791, kTol);
  const Rating a = R(1621, 95), b = R(1488, 210);
  EXPECT_NEAR(GlickoWinProbability(a, b, kQ) + GlickoWinProbability(b, a, kQ), 1.0, 1e-15);
  EXPECT_THROW(GlickoWinProbability(Rating{1500, std::nullopt}, a, kQ), std::invalid_argument);
}

TEST(GlickoTest, FfaWinProbability) {
  const std::vector<Rating> same(5, R(1500, 350));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(GlickoFfaWinProbability(same, i, kQ), 0.2, kTol);

  const std::vector<Rating> two{R(1700, 30), R(1500, 30)};
  EXPECT_EQ(GlickoFfaWinProbability(two, 0, kQ), GlickoWinProbability(two[0], two[1], kQ));

  const std::vector<Rating> field{R(1500, 350), R(1720, 60), R(1380, 120), R(1610, 250)};
  double sum = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) sum += GlickoFfaWinProbability(field, i, kQ);
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_THROW(GlickoFfaWinProbability(std::vector<Rating>{R(1500, 1)}, 0, kQ),
               std::invalid_argument);
}

TEST(GlickoTest, DSquared) {
  EXPECT_NEAR(GlickoDSquared(0.5, 1.0, kQ), 120709.92312294315478, 1e-6);  // 4 / q^2
  EXPECT_NEAR(GlickoDSquared(0.5, 0.5, kQ), 4.0 * GlickoDSquared(0.5, 1.0, kQ), 1e-6);
  EXPECT_LT(GlickoDSquared(0.5, 0.8, kQ), GlickoDSquared(0.3, 0.8, kQ));
  EXPECT_LT(GlickoDSquared(0.5, 0.8, kQ), GlickoDSquared(0.7, 0.8, kQ));
  EXPECT_THROW(GlickoDSquared(0.0, 1.0, kQ), DegenerateProbabilityError);
  EXPECT_THROW(GlickoDSquared(1.0, 1.0, kQ), DegenerateProbabilityError);
}

TEST(GlickoTest, FfaUpdateTwoDefaultPlayers) {
  const GlickoConfig cfg;
  const auto out = GlickoFfaUpdate(std::vector{R(1500, 350), R(1500, 350)}, std::vector{1, 2}, cfg);
  // g(350) -> Pr = 0.5 -> d^2 -> mu', sigma' (mpmath)
  EXPECT_NEAR(out[0].mu, 1662.2121790106563371, 1e-9);
  EXPECT_NEAR(*out[0].sigma, 290.23024334413655498, 1e-9);
  EXPECT_NEAR(out[1].mu - 1500.0, -(out[0].mu - 1500.0), 1e-9);
  EXPECT_EQ(*out[0].sigma, *out[1].sigma);
}

TEST(GlickoTest, FfaUpdateProperties) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> mu(1500, 150);
  std::uniform_real_distribution<double> sigma(30, 350);
  const GlickoConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 25);
    std::vector<Rating> ratings(n);
    for (auto& r : ratings) r = R(mu(rng), sigma(rng));
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 1);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    const auto out = GlickoFfaUpdate(ratings, ranks, cfg);
    for (int i = 0; i < n; ++i) {
      EXPECT_LT(*out[i].sigma, *ratings[i].sigma);
      const double pr = GlickoFfaWinProbability(ratings, i, cfg.q);
      const double result = static_cast<double>(n - ranks[i]) / (n * (n - 1) / 2.0);
      if (result > pr) EXPECT_GT(out[i].mu, ratings[i].mu);
      if (result < pr) EXPECT_LT(out[i].mu, ratings[i].mu);
    }
  }
}

TEST(GlickoTest, HeadToHeadIsBitIdenticalAtTwoPlayers) {
  const GlickoConfig cfg;
  const Rating w = R(1533.5, 71.25), l = R(1602.0, 190.0);
  const auto [hw, hl] = GlickoHeadToHeadUpdate(w, l, cfg);
  const auto ffa = GlickoFfaUpdate(std::vector{w, l}, std::vector{1, 2}, cfg);
  EXPECT_EQ(hw, ffa[0]);
  EXPECT_EQ(hl, ffa[1]);
}

TEST(GlickoTest, DegenerateProbabilityPropagates) {
  const GlickoConfig cfg;
  // 10^-(g * 1e6 / 400) underflows: the loser's win probability is exactly 0.
  EXPECT_THROW(GlickoFfaUpdate(std::vector{R(1e6, 1), R(0, 1)}, std::vector{1, 2}, cfg),
               DegenerateProbabilityError);
}

}  // namespace
}  // namespace ffarank
