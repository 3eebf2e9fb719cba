#include "ffarank/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ffarank/csv.h"
#include "ffarank/random.h"
#include "ffarank/report.h"

namespace ffarank {
namespace {

constexpr Timestamp kEpochBase = 1509494400;  // 2017-11-01T00:00:00Z
constexpr Timestamp kMatchSpacing = 60;

std::string FormatId(char prefix, long long value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%c%0*lld", prefix, width, value);
  return buf;
}

}  // namespace

void SynthConfig::Validate() const {
  if (n_players < 2 || n_matches < 0) {
    throw std::invalid_argument("synthetic config needs at least two players");
  }
  if (players_per_match < 2 || players_per_match > n_players) {
    throw std::invalid_argument("players_per_match must lie in [2, n_players]");
  }
  if (!(latent_skill_sd > 0.0) || !(performance_noise_sd >= 0.0) ||
      !std::isfinite(latent_skill_sd) || !std::isfinite(performance_noise_sd)) {
    throw std::invalid_argument("latent_skill_sd must be > 0 and performance_noise_sd >= 0");
  }
  if (!(new_player_rate >= 0.0 && new_player_rate <= 1.0) ||
      !(injection_fraction >= 0.0 && injection_fraction <= 1.0)) {
    throw std::invalid_argument("newcomer rates must lie in [0, 1]");
  }
}

SyntheticData GenerateSynthetic(const SynthConfig& cfg) {
  cfg.Validate();
  Rng rng(MixBits(cfg.seed));
  std::normal_distribution<double> skill_dist(0.0, cfg.latent_skill_sd);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SyntheticData data;
  std::vector<double> skill;
  std::vector<PlayerId> ids;
  auto create = [&](char prefix, long long serial) {
    ids.emplace_back(FormatId(prefix, serial, 6));
    skill.push_back(skill_dist(rng));
    return static_cast<int>(ids.size()) - 1;
  };
  for (int i = 0; i < cfg.n_players; ++i) create('p', i);

  // Population members available for sampling, partially shuffled in place.
  std::vector<int> population(cfg.n_players);
  std::iota(population.begin(), population.end(), 0);
  long long newcomer_serial = 0;

  const int k = cfg.players_per_match;
  const int injected = static_cast<int>(std::lround(cfg.injection_fraction * k));
  data.matches.reserve(cfg.n_matches);
  std::vector<int> field(k);
  std::vector<std::pair<double, int>> perf(k);
  for (int m = 0; m < cfg.n_matches; ++m) {
    int newcomers = 0;
    if (m >= cfg.injection_start) {
      newcomers = injected;
    } else if (cfg.new_player_rate > 0.0) {
      for (int s = 0; s < k; ++s) newcomers += unit(rng) < cfg.new_player_rate;
    }
    const int regulars = k - newcomers;
    const int pop = static_cast<int>(population.size());
    for (int s = 0; s < regulars; ++s) {
      std::uniform_int_distribution<int> pick(s, pop - 1);
      std::swap(population[s], population[pick(rng)]);
      field[s] = population[s];
    }
    for (int s = regulars; s < k; ++s) {
      field[s] = create('n', newcomer_serial++);
      population.push_back(field[s]);
    }

    std::normal_distribution<double> noise(0.0, cfg.performance_noise_sd);
    for (int s = 0; s < k; ++s) {
      const double eps = cfg.performance_noise_sd > 0.0 ? noise(rng) : 0.0;
      perf[s] = {skill[field[s]] + eps, field[s]};
    }
    std::sort(perf.begin(), perf.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    MatchRecord match;
    match.match_id = FormatId('m', m, 7);
    match.timestamp = kEpochBase + kMatchSpacing * m;
    match.entries.reserve(k);
    for (int r = 0; r < k; ++r) match.entries.push_back({ids[perf[r].second], r + 1});
    data.matches.push_back(std::move(match));
  }

  data.latent.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) data.latent.push_back({ids[i], skill[i]});
  return data;
}

void WriteLatentTable(std::ostream& out, std::span<const LatentSkill> latent,
                      char delimiter) {
  out << "player_id" << delimiter << "latent_skill\n";
  for (const auto& l : latent) {
    out << QuoteField(l.player.str(), delimiter) << delimiter << FormatDouble(l.skill) << '\n';
  }
}

}  // namespace ffarank
