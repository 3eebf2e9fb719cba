#include "ffarank/cli.h"

#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "ffarank/analysis.h"
#include "ffarank/ingest.h"
#include "ffarank/rating_system.h"
#include "ffarank/replay.h"
#include "ffarank/report.h"
#include "ffarank/synth.h"

namespace ffarank {
namespace {

namespace fs = std::filesystem;

struct RunConfig {
  std::string input;
  std::string synth;
  std::string system = "all";
  std::string setup = "all_players";
  std::uint64_t seed = 0;
  std::string out_dir;
  int window = 0;
  char delimiter = ',';
  SystemConfig systems;
  std::string schedule = "ep";
  std::optional<int> cohort_size, min_games, horizon;
  int bins = 5;
};

// "players=500,matches=5000,per_match=10,skill_sd=1,noise_sd=1,new_rate=0"
SynthConfig ParseSynthSpec(const std::string& spec, std::uint64_t seed) {
  SynthConfig cfg;
  cfg.seed = seed;
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("synth spec item without '=': " + item);
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    auto as_int = [&] {
      int v = 0;
      if (!CLI::detail::lexical_cast(value, v)) {
        throw std::invalid_argument("bad value for synth spec key " + key + ": " + value);
      }
      return v;
    };
    auto as_double = [&] {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(value, v)) {
        throw std::invalid_argument("bad value for synth spec key " + key + ": " + value);
      }
      return v;
    };
    if (key == "players") cfg.n_players = as_int();
    else if (key == "matches") cfg.n_matches = as_int();
    else if (key == "per_match") cfg.players_per_match = as_int();
    else if (key == "skill_sd") cfg.latent_skill_sd = as_double();
    else if (key == "noise_sd") cfg.performance_noise_sd = as_double();
    else if (key == "new_rate") cfg.new_player_rate = as_double();
    else if (key == "inject_after") cfg.injection_start = as_int();
    else if (key == "inject_fraction") cfg.injection_fraction = as_double();
    else throw std::invalid_argument("unknown synth spec key: " + key);
  }
  cfg.Validate();
  return cfg;
}

std::vector<SystemKind> SelectSystems(const std::string& name) {
  if (name == "all") return {std::begin(kAllSystems), std::end(kAllSystems)};
  if (auto k = ParseSystemKind(name)) return {*k};
  throw std::invalid_argument("unknown system: " + name);
}

CohortKind ParseSetup(const std::string& name) {
  for (CohortKind k : {CohortKind::kAll, CohortKind::kBest, CohortKind::kFrequent,
                       CohortKind::kBinned}) {
    if (CohortKindName(k) == name) return k;
  }
  throw std::invalid_argument("unknown setup: " + name);
}

struct SystemOutput {
  std::map<std::string, std::string> files;  // file name -> contents
  MetricValues means{};
  std::size_t matches = 0;
  std::vector<std::string> warnings;
};

SystemOutput RunSystem(std::span<const MatchRecord> matches, SystemKind kind,
                       const RunConfig& cfg, CohortKind setup) {
  const auto system = MakeRatingSystem(kind, cfg.systems);
  const std::string name(system->name());
  CohortSpec spec = setup == CohortKind::kFrequent ? CohortSpec::Frequent()
                    : setup == CohortKind::kBinned ? CohortSpec::Binned()
                                                   : CohortSpec::Best();
  spec.kind = setup;
  spec.seed = cfg.seed;
  spec.bins = cfg.bins;
  if (cfg.cohort_size) spec.cohort_size = *cfg.cohort_size;
  if (cfg.min_games) spec.min_games = *cfg.min_games;
  if (cfg.horizon) spec.horizon = *cfg.horizon;
  spec.Validate();

  ReplayOptions options;
  options.seed = cfg.seed;
  options.history_limit = (setup == CohortKind::kBest || setup == CohortKind::kFrequent)
                              ? static_cast<std::size_t>(spec.horizon)
                              : 0;
  options.keep_outcomes = setup == CohortKind::kBinned;
  const ReplayResult replay = Replay(matches, *system, options);

  SystemOutput result;
  result.matches = replay.series.size();
  result.means = SeriesMeans(replay.series);
  std::ostringstream series, ratings;
  WriteSeries(series, replay.series, cfg.delimiter);
  result.files[name + "_series.csv"] = series.str();
  if (cfg.window > 1) {
    std::ostringstream smoothed;
    WriteSeries(smoothed, SmoothTrailing(replay.series, cfg.window), cfg.delimiter);
    result.files[name + "_series_smoothed.csv"] = smoothed.str();
  }
  WriteRatingSnapshot(ratings, replay.store, cfg.delimiter);
  result.files[name + "_ratings.csv"] = ratings.str();

  if (setup == CohortKind::kBest || setup == CohortKind::kFrequent) {
    const CohortCurves curves = setup == CohortKind::kBest
                                    ? CohortBest(replay, *system, spec)
                                    : CohortFrequent(replay, spec);
    if (curves.undersized) {
      result.warnings.push_back(name + ": only " + std::to_string(curves.members.size()) +
                                " players have more than " + std::to_string(spec.min_games) +
                                " games; using all of them");
    }
    std::ostringstream os;
    WriteCohortCurves(os, curves, cfg.delimiter);
    result.files[name + "_cohort_" + std::string(CohortKindName(setup)) + ".csv"] = os.str();
  } else if (setup == CohortKind::kBinned) {
    const BinTable table = BinnedRanks(replay.outcomes, spec.bins);
    if (table.matches_skipped > 0) {
      result.warnings.push_back(name + ": " + std::to_string(table.matches_skipped) +
                                " matches have fewer than " + std::to_string(spec.bins) +
                                " players and were left out of the bin table");
    }
    std::ostringstream os;
    WriteBinTable(os, table, cfg.delimiter);
    result.files[name + "_bins.csv"] = os.str();
  }
  return result;
}

void WriteFile(const fs::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  f << contents;
  if (!f) throw std::runtime_error("cannot write " + path.string());
}

int CmdReplay(RunConfig cfg, std::ostream& out, std::ostream& err) {
  std::vector<MatchRecord> matches;
  std::vector<SystemKind> systems;
  CohortKind setup;
  try {
    systems = SelectSystems(cfg.system);
    setup = ParseSetup(cfg.setup);
    if (cfg.schedule == "sequential") {
      cfg.systems.trueskill.schedule = TrueSkillSchedule::kSequentialPairwise;
    }
    else if (cfg.schedule != "ep") throw std::invalid_argument("unknown schedule: " + cfg.schedule);
    if (!cfg.input.empty()) {
      ParseOptions po{cfg.delimiter, cfg.seed};
      ParseResult parsed = ParseMatchLogFile(cfg.input, po);
      matches = std::move(parsed.matches);
    } else {
      matches = GenerateSynthetic(ParseSynthSpec(cfg.synth, cfg.seed)).matches;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::vector<SystemOutput> results(systems.size());
  std::vector<std::exception_ptr> failures(systems.size());
  const auto n = static_cast<std::ptrdiff_t>(systems.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = RunSystem(matches, systems[i], cfg, setup);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (auto& f : failures) {
    if (!f) continue;
    try {
      std::rethrow_exception(f);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

  std::ostringstream summary;
  summary << "system" << cfg.delimiter << "matches";
  for (Metric m : kAllMetrics) summary << cfg.delimiter << MetricName(m);
  summary << '\n';
  for (std::size_t i = 0; i < systems.size(); ++i) {
    summary << SystemName(systems[i]) << cfg.delimiter << results[i].matches;
    for (double v : results[i].means) summary << cfg.delimiter << FormatDouble(v);
    summary << '\n';
  }
  try {
    fs::create_directories(cfg.out_dir);
    for (const auto& r : results) {
      for (const auto& [file, contents] : r.files) WriteFile(fs::path(cfg.out_dir) / file, contents);
    }
    WriteFile(fs::path(cfg.out_dir) / "summary.csv", summary.str());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  for (const auto& r : results) {
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  }

  out << "matches replayed: " << matches.size() << "  setup: " << cfg.setup << '\n';
  out << std::left << std::setw(14) << "system";
  for (Metric m : kAllMetrics) out << std::right << std::setw(12) << MetricName(m);
  out << '\n' << std::fixed << std::setprecision(4);
  for (std::size_t i = 0; i < systems.size(); ++i) {
    out << std::left << std::setw(14) << SystemName(systems[i]);
    for (double v : results[i].means) out << std::right << std::setw(12) << v;
    out << '\n';
  }
  out.unsetf(std::ios::floatfield);
  return 0;
}

int CmdValidate(const std::string& input, char delimiter, std::uint64_t seed,
                std::ostream& out, std::ostream& err) {
  ParseResult parsed;
  try {
    parsed = ParseMatchLogFile(input, ParseOptions{delimiter, seed});
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  std::unordered_set<std::string> players;
  for (const auto& m : parsed.matches) {
    for (const auto& e : m.entries) players.insert(e.player.str());
  }
  const IngestStats& s = parsed.stats;
  out << "matches: " << parsed.matches.size() << '\n'
      << "players: " << players.size() << '\n'
      << "rows read: " << s.rows_read << '\n'
      << "rows skipped (unparseable): " << s.rows_unparseable << '\n'
      << "rows skipped (not solo): " << s.rows_non_solo << '\n'
      << "matches rejected (duplicate player): " << s.matches_duplicate_player << '\n'
      << "matches dropped (fewer than 2 players): " << s.matches_too_small << '\n'
      << "matches repaired: " << s.matches_repaired << '\n'
      << "tie groups broken: " << s.tie_groups << '\n';
  for (const auto& d : s.diagnostics) out << "  " << d << '\n';
  return 0;
}

int CmdSynth(const SynthConfig& cfg, const std::string& out_path, std::string latent_path,
             char delimiter, std::ostream& out, std::ostream& err) {
  try {
    cfg.Validate();
    const SyntheticData data = GenerateSynthetic(cfg);
    if (latent_path.empty()) {
      fs::path p(out_path);
      latent_path = (p.parent_path() / (p.stem().string() + "_latent.csv")).string();
    }
    std::ostringstream log, latent;
    WriteMatchLog(log, data.matches, delimiter);
    WriteLatentTable(latent, data.latent, delimiter);
    WriteFile(out_path, log.str());
    WriteFile(latent_path, latent.str());
    out << "wrote " << data.matches.size() << " matches to " << out_path << " and "
        << data.latent.size() << " latent skills to " << latent_path << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skill-rating replay and rank-prediction evaluation for free-for-all matches"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* replay = app.add_subcommand("replay", "Replay matches and evaluate rank predictions");
  auto* in_opt = replay->add_option("--input", cfg.input, "Delimited match log")->check(CLI::ExistingFile);
  auto* synth_opt = replay->add_option("--synth", cfg.synth,
                                       "Synthetic stream, e.g. players=500,matches=5000,per_match=10");
  in_opt->excludes(synth_opt);
  replay->add_option("--system", cfg.system, "elo|glicko|trueskill|previous_rank|all")
      ->capture_default_str();
  replay->add_option("--setup", cfg.setup, "all_players|best|frequent|binned")->capture_default_str();
  replay->add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  replay->add_option("--out", cfg.out_dir, "Output directory")->required();
  replay->add_option("--window", cfg.window, "Trailing moving-average window for *_series_smoothed.csv");
  replay->add_option("--k", cfg.systems.elo.k, "Elo K")->capture_default_str();
  replay->add_option("--d", cfg.systems.elo.d, "Elo D")->capture_default_str();
  replay->add_option("--beta", cfg.systems.trueskill.beta, "TrueSkill beta")->capture_default_str();
  replay->add_option("--tau-dynamics", cfg.systems.trueskill.tau, "TrueSkill dynamics tau")
      ->capture_default_str();
  replay->add_option("--trueskill-schedule", cfg.schedule, "ep|sequential")->capture_default_str();
  replay->add_option("--cohort-size", cfg.cohort_size, "Players per cohort (default 1000)");
  replay->add_option("--min-games", cfg.min_games, "Cohort eligibility: more than this many games");
  replay->add_option("--horizon", cfg.horizon, "Games tracked per cohort member");
  replay->add_option("--bins", cfg.bins, "Observed-rank bins for the binned setup")->capture_default_str();
  replay->add_option("--delimiter", cfg.delimiter, "Field delimiter")->capture_default_str();

  std::string validate_input;
  char validate_delim = ',';
  std::uint64_t validate_seed = 0;
  auto* validate = app.add_subcommand("validate", "Parse a match log and report repairs");
  validate->add_option("--input", validate_input, "Delimited match log")->required();
  validate->add_option("--delimiter", validate_delim, "Field delimiter");
  validate->add_option("--seed", validate_seed, "Seed for tie repair");

  SynthConfig synth_cfg;
  std::string synth_out, synth_latent;
  char synth_delim = ',';
  auto* synth = app.add_subcommand("synth", "Write a synthetic latent-skill match log");
  synth->add_option("--out", synth_out, "Match log path")->required();
  synth->add_option("--latent", synth_latent, "Latent skill table path (default <out>_latent.csv)");
  synth->add_option("--players", synth_cfg.n_players)->capture_default_str();
  synth->add_option("--matches", synth_cfg.n_matches)->capture_default_str();
  synth->add_option("--per-match", synth_cfg.players_per_match)->capture_default_str();
  synth->add_option("--skill-sd", synth_cfg.latent_skill_sd)->capture_default_str();
  synth->add_option("--noise-sd", synth_cfg.performance_noise_sd)->capture_default_str();
  synth->add_option("--new-rate", synth_cfg.new_player_rate)->capture_default_str();
  synth->add_option("--inject-after", synth_cfg.injection_start);
  synth->add_option("--inject-fraction", synth_cfg.injection_fraction);
  synth->add_option("--seed", synth_cfg.seed)->capture_default_str();
  synth->add_option("--delimiter", synth_delim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (replay->parsed()) {
    if (cfg.input.empty() == cfg.synth.empty()) {
      err << "error: exactly one of --input or --synth is required\n";
      return 2;
    }
    return CmdReplay(cfg, out, err);
  }
  if (validate->parsed()) {
    return CmdValidate(validate_input, validate_delim, validate_seed, out, err);
  }
  return CmdSynth(synth_cfg, synth_out, synth_latent, synth_delim, out, err);
}

}  // namespace ffarank
