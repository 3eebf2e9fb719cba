#include "ffarank/report.h"

#include "ffarank/csv.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ffarank {

std::string FormatDouble(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void WriteSeries(std::ostream& out, const MetricSeries& series, char delimiter) {
  const char d = delimiter;
  out << "match_index" << d << "match_id" << d << "n_players" << d << "fraction_known";
  for (Metric m : kAllMetrics) out << d << MetricName(m);
  out << '\n';
  for (const auto& row : series) {
    out << row.match_index << d << QuoteField(row.match_id, d) << d << row.n_players << d
        << FormatDouble(row.fraction_known);
    for (double v : row.metrics) out << d << FormatDouble(v);
    out << '\n';
  }
}

void WriteCohortCurves(std::ostream& out, const CohortCurves& curves, char delimiter) {
  const char d = delimiter;
  out << "game_index" << d << "metric" << d << "mean" << d << "stderr" << d << "n\n";
  for (const auto& p : curves.points) {
    out << p.game_index << d << MetricName(p.metric) << d << FormatDouble(p.mean) << d
        << FormatDouble(p.stderr_) << d << p.n << '\n';
  }
}

void WriteBinTable(std::ostream& out, const BinTable& table, char delimiter) {
  const char d = delimiter;
  out << "bin" << d << "metric" << d << "mean" << d << "n\n";
  if (table.matches_used == 0) return;
  for (int b = 0; b < table.bins; ++b) {
    for (Metric m : kAllMetrics) {
      const BinCell& cell = table.cells[b][static_cast<int>(m)];
      out << b + 1 << d << MetricName(m) << d << FormatDouble(cell.mean) << d << cell.n
          << '\n';
    }
  }
}

void WriteRatingSnapshot(std::ostream& out, const RatingStore& store, char delimiter) {
  const char d = delimiter;
  out << "player_id" << d << "mu" << d << "sigma" << d << "games_played\n";
  for (const auto& [id, state] : store.Snapshot()) {
    out << QuoteField(id.str(), d) << d << FormatDouble(state.rating.mu) << d
        << (state.rating.sigma ? FormatDouble(*state.rating.sigma) : std::string()) << d
        << state.games_played << '\n';
  }
}

RatingStore ReadRatingSnapshot(std::istream& in, char delimiter) {
  auto split = [delimiter](const std::string& line) { return SplitFields(line, delimiter); };
  auto parse_double = [](const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
      throw std::runtime_error("bad number in rating snapshot: " + s);
    }
    return v;
  };

  std::string line;
  if (!std::getline(in, line) || split(line) != std::vector<std::string>{
                                                    "player_id", "mu", "sigma",
                                                    "games_played"}) {
    throw std::runtime_error("rating snapshot header must be player_id,mu,sigma,games_played");
  }
  RatingStore store;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 4) throw std::runtime_error("bad rating snapshot row: " + line);
    PlayerState state;
    state.rating.mu = parse_double(f[1]);
    if (!f[2].empty()) state.rating.sigma = parse_double(f[2]);
    state.games_played = static_cast<int>(parse_double(f[3]));
    store.Set(PlayerId(f[0]), state);
  }
  return store;
}

MetricValues SeriesMeans(const MetricSeries& series) {
  MetricValues sum{};
  for (const auto& row : series) {
    for (int m = 0; m < kNumMetrics; ++m) sum[m] += row.metrics[m];
  }
  if (!series.empty()) {
    for (double& v : sum) v /= static_cast<double>(series.size());
  }
  return sum;
}

}  // namespace ffarank
