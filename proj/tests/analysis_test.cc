#include "ffarank/analysis.h"

#include <cmath>
#include <cstring>
#include <numeric>
#include <random>

#include "ffarank/synth.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace ffarank {
namespace {

ReplayResult ZeroNoiseReplay(SystemKind kind, std::uint64_t seed = 1) {
  SynthConfig cfg;
  cfg.n_players = 200;
  cfg.n_matches = 2000;
  cfg.players_per_match = 10;
  cfg.performance_noise_sd = 0.0;
  cfg.seed = seed;
  ReplayOptions opts;
  opts.seed = seed;
  return Replay(GenerateSynthetic(cfg).matches, *MakeRatingSystem(kind), opts);
}

double PointMean(const CohortCurves& c, int game, Metric m) {
  for (const auto& p : c.points)
    if (p.game_index == game && p.metric == m) return p.mean;
  return NAN;
}

TEST(AnalysisTest, BinSizes) {
  EXPECT_EQ(BinSizes(100, 5), std::vector<int>(5, 20));
  EXPECT_EQ(BinSizes(7, 5), (std::vector<int>{2, 2, 1, 1, 1}));
  EXPECT_EQ(BinSizes(5, 5), std::vector<int>(5, 1));
  EXPECT_THROW(BinSizes(4, 5), std::invalid_argument);
}

TEST(AnalysisTest, PerPlayerContribution) {
  const RankOutcome o = MakeOutcome(std::vector{1, 2, 3, 4}, std::vector{1, 3, 4, 2});
  const auto perfect = PerPlayerContribution(o, PlayerId("p1"));
  EXPECT_EQ(perfect.error, 0);
  EXPECT_EQ(perfect.relevance, 1.0);
  EXPECT_TRUE(perfect.hit);
  const RankOutcome far = MakeOutcome(std::vector{1, 2, 3, 4}, std::vector{4, 1, 2, 3});
  const auto miss = PerPlayerContribution(far, PlayerId("p1"));
  EXPECT_EQ(miss.error, 3);
  EXPECT_EQ(miss.relevance, 0.25);
  EXPECT_FALSE(miss.hit);
  EXPECT_THROW(PerPlayerContribution(o, PlayerId("zed")), std::invalid_argument);
}

TEST(AnalysisTest, PerfectPredictorFillsEveryBinWithOnes) {
  std::vector<RankOutcome> outcomes;
  for (int n : {5, 7, 10, 23, 100}) {
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    outcomes.push_back(MakeOutcome(r, r));
  }
  const BinTable t = BinnedRanks(outcomes);
  EXPECT_EQ(t.matches_used, 5u);
  for (int b = 0; b < 5; ++b) {
    EXPECT_EQ(t.cells[b][static_cast<int>(Metric::kAccuracy)].mean, 1.0);
    EXPECT_EQ(t.cells[b][static_cast<int>(Metric::kNdcg)].mean, 1.0);
    EXPECT_EQ(t.cells[b][static_cast<int>(Metric::kMae)].mean, 0.0);
  }
  // Bins hold a single player for N=5 and 7, so tau only counts the others.
  EXPECT_EQ(t.cells[4][static_cast<int>(Metric::kKendallTau)].n, 3);
  EXPECT_EQ(t.cells[0][static_cast<int>(Metric::kKendallTau)].n, 4);
}

TEST(AnalysisTest, SmallMatchesAreSkipped) {
  std::vector<RankOutcome> outcomes{MakeOutcome(std::vector{1, 2, 3}, std::vector{3, 2, 1}),
                                    MakeOutcome(std::vector{1, 2}, std::vector{1, 2})};
  const BinTable t = BinnedRanks(outcomes);
  EXPECT_EQ(t.matches_used, 0u);
  EXPECT_EQ(t.matches_skipped, 2u);
}

TEST(AnalysisTest, BinnedParallelEqualsSerial) {
  std::mt19937_64 rng(8);
  std::vector<RankOutcome> outcomes;
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + static_cast<int>(rng() % 100);
    outcomes.push_back(MakeOutcome(oracle::RandomPermutation(n, rng),
                                   oracle::RandomPermutation(n, rng)));
  }
  for (int bins : {1, 3, 5}) {
    const BinTable a = BinnedRanks(outcomes, bins), b = BinnedRanksSerial(outcomes, bins);
    EXPECT_EQ(a.matches_used, b.matches_used);
    EXPECT_EQ(a.matches_skipped, b.matches_skipped);
    for (int bin = 0; bin < bins; ++bin)
      for (int m = 0; m < kNumMetrics; ++m) {
        EXPECT_EQ(std::memcmp(&a.cells[bin][m].mean, &b.cells[bin][m].mean, sizeof(double)), 0);
        EXPECT_EQ(a.cells[bin][m].n, b.cells[bin][m].n);
      }
  }
}

TEST(AnalysisTest, BinsUseObservedRankGroups) {
  // Predicted order is perfect for the top five finishers and reversed for
  // the bottom five.
  const RankOutcome o = MakeOutcome(std::vector{1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
                                    std::vector{1, 2, 3, 4, 5, 10, 9, 8, 7, 6});
  const BinTable t = BinnedRanks(std::span(&o, 1), 2);
  EXPECT_EQ(t.cells[0][static_cast<int>(Metric::kKendallTau)].mean, 1.0);
  EXPECT_EQ(t.cells[1][static_cast<int>(Metric::kKendallTau)].mean, -1.0);
}

TEST(AnalysisTest, BestCohortRespectsEligibilityAndSize) {
  const auto r = ZeroNoiseReplay(SystemKind::kElo);
  const auto elo = MakeRatingSystem(SystemKind::kElo);
  CohortSpec spec = CohortSpec::Best();
  spec.cohort_size = 20;
  const auto best = CohortBest(r, *elo, spec);
  ASSERT_EQ(best.members.size(), 20u);
  EXPECT_FALSE(best.undersized);
  double weakest_member = INFINITY;
  for (const auto& id : best.members) {
    EXPECT_GT(r.store.Find(id)->games_played, spec.min_games);
    weakest_member = std::min(weakest_member, r.store.Find(id)->rating.mu);
  }
  int stronger_outsiders = 0;
  for (const auto& [id, st] : r.store.Snapshot())
    if (st.games_played > spec.min_games && st.rating.mu > weakest_member) ++stronger_outsiders;
  EXPECT_LE(stronger_outsiders, 19);

  spec.cohort_size = 100000;
  const auto all = CohortBest(r, *elo, spec);
  EXPECT_TRUE(all.undersized);
  EXPECT_EQ(all.members.size(), r.store.size());
}

TEST(AnalysisTest, FrequentCohortIsSeeded) {
  const auto r = ZeroNoiseReplay(SystemKind::kGlicko);
  CohortSpec spec = CohortSpec::Frequent();
  spec.cohort_size = 30;
  spec.min_games = 50;
  spec.seed = 4;
  const auto a = CohortFrequent(r, spec), b = CohortFrequent(r, spec);
  EXPECT_EQ(a.members, b.members);
  spec.seed = 5;
  EXPECT_NE(CohortFrequent(r, spec).members, a.members);
  for (const auto& id : a.members) EXPECT_GT(r.store.Find(id)->games_played, 50);
}

TEST(AnalysisTest, ZeroNoiseCurvesImprove) {
  const auto r = ZeroNoiseReplay(SystemKind::kTrueSkill);
  CohortSpec spec = CohortSpec::Frequent();
  spec.cohort_size = 100;
  spec.min_games = 80;
  spec.horizon = 80;
  const auto c = CohortFrequent(r, spec);
  const auto first = [&](Metric m) {
    double s = 0;
    for (int g = 1; g <= 10; ++g) s += PointMean(c, g, m);
    return s / 10;
  };
  const auto last = [&](Metric m) {
    double s = 0;
    for (int g = 71; g <= 80; ++g) s += PointMean(c, g, m);
    return s / 10;
  };
  EXPECT_GT(last(Metric::kAccuracy), first(Metric::kAccuracy));
  EXPECT_LT(last(Metric::kMae), first(Metric::kMae));
  for (const auto& p : c.points) {
    EXPECT_LE(p.n, static_cast<int>(c.members.size()));
    if (p.n < 2) EXPECT_EQ(p.stderr_, 0.0);
  }
}

TEST(AnalysisTest, CurvesForExplicitMembers) {
  std::vector<MatchRecord> matches;
  for (int m = 0; m < 3; ++m) {
    MatchRecord rec{"m" + std::to_string(m), m, {}};
    rec.entries = {{PlayerId("a"), 1}, {PlayerId("b"), 2}};
    matches.push_back(rec);
  }
  const auto r = Replay(matches, *MakeRatingSystem(SystemKind::kPreviousRank));
  const auto c = CohortCurvesFor(r, {PlayerId("a"), PlayerId("b")}, 2);
  // PreviousRank is exact from game 2 on.
  EXPECT_EQ(PointMean(c, 2, Metric::kAccuracy), 1.0);
  EXPECT_EQ(PointMean(c, 2, Metric::kMrr), 1.0);
  EXPECT_TRUE(std::isnan(PointMean(c, 3, Metric::kAccuracy)));
}

TEST(AnalysisTest, SmoothTrailing) {
  MetricSeries s(4);
  for (int i = 0; i < 4; ++i) {
    s[i].match_index = i;
    s[i].metrics.fill(i + 1.0);
  }
  const auto sm = SmoothTrailing(s, 2);
  EXPECT_EQ(sm[0].metrics[0], 1.0);
  EXPECT_EQ(sm[1].metrics[0], 1.5);
  EXPECT_EQ(sm[3].metrics[5], 3.5);
  EXPECT_EQ(SmoothTrailing(s, 1)[2].metrics[0], 3.0);
}

}  // namespace
}  // namespace ffarank
