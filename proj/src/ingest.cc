#include "ffarank/ingest.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include "ffarank/csv.h"
#include "ffarank/random.h"

namespace ffarank {
namespace {

struct RawEntry {
  std::string player;
  int placement;
};

struct RawMatch {
  Timestamp timestamp;
  std::vector<RawEntry> entries;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
std::optional<T> ParseNumber(std::string_view s) {
  s = Trim(s);
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Fixed-width unsigned field; advances `s`.
std::optional<int> TakeDigits(std::string_view& s, std::size_t width) {
  if (s.size() < width) return std::nullopt;
  for (std::size_t i = 0; i < width; ++i) {
    if (s[i] < '0' || s[i] > '9') return std::nullopt;
  }
  auto v = ParseNumber<int>(s.substr(0, width));
  s.remove_prefix(width);
  return v;
}

bool TakeChar(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

int FindColumn(const std::vector<std::string>& header,
               std::initializer_list<std::string_view> names) {
  for (std::string_view name : names) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it != header.end()) return static_cast<int>(it - header.begin());
  }
  return -1;
}

// Orders entries by placement, breaks ties with a seeded shuffle and
// renumbers 1..N.
MatchRecord Repair(const std::string& match_id, RawMatch raw,
                   const ParseOptions& options, IngestStats& stats) {
  auto& e = raw.entries;
  std::sort(e.begin(), e.end(), [](const RawEntry& a, const RawEntry& b) {
    return a.placement != b.placement ? a.placement < b.placement : a.player < b.player;
  });
  Rng rng(StreamSeed(options.seed, match_id));
  bool repaired = false;
  for (std::size_t lo = 0; lo < e.size();) {
    std::size_t hi = lo + 1;
    while (hi < e.size() && e[hi].placement == e[lo].placement) ++hi;
    if (hi - lo > 1) {
      ++stats.tie_groups;
      repaired = true;
      std::vector<std::pair<std::uint64_t, RawEntry>> keyed;
      for (std::size_t i = lo; i < hi; ++i) keyed.emplace_back(rng(), e[i]);
      std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        return a.first < b.first;
      });
      for (std::size_t i = lo; i < hi; ++i) e[i] = keyed[i - lo].second;
    }
    lo = hi;
  }
  MatchRecord match;
  match.match_id = match_id;
  match.timestamp = raw.timestamp;
  match.entries.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int rank = static_cast<int>(i) + 1;
    if (e[i].placement != rank) repaired = true;
    match.entries.push_back({PlayerId(e[i].player), rank});
  }
  if (repaired) ++stats.matches_repaired;
  return match;
}

}  // namespace

std::optional<Timestamp> ParseTimestamp(std::string_view text) {
  text = Trim(text);
  if (text.empty()) return std::nullopt;
  if (auto epoch = ParseNumber<Timestamp>(text)) return epoch;

  std::string_view s = text;
  auto year = TakeDigits(s, 4);
  if (!year || !TakeChar(s, '-')) return std::nullopt;
  auto month = TakeDigits(s, 2);
  if (!month || !TakeChar(s, '-')) return std::nullopt;
  auto day = TakeDigits(s, 2);
  if (!day) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year{*year},
                                        std::chrono::month{static_cast<unsigned>(*month)},
                                        std::chrono::day{static_cast<unsigned>(*day)}};
  if (!ymd.ok()) return std::nullopt;

  int hour = 0, minute = 0, second = 0;
  if (TakeChar(s, 'T') || TakeChar(s, ' ')) {
    auto h = TakeDigits(s, 2);
    if (!h || !TakeChar(s, ':')) return std::nullopt;
    auto m = TakeDigits(s, 2);
    if (!m) return std::nullopt;
    hour = *h;
    minute = *m;
    if (TakeChar(s, ':')) {
      auto sec = TakeDigits(s, 2);
      if (!sec) return std::nullopt;
      second = *sec;
      if (TakeChar(s, '.')) {
        while (!s.empty() && s.front() >= '0' && s.front() <= '9') s.remove_prefix(1);
      }
    }
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
  }
  int offset = 0;
  if (!TakeChar(s, 'Z') && !s.empty() && (s.front() == '+' || s.front() == '-')) {
    const int sign = s.front() == '-' ? -1 : 1;
    s.remove_prefix(1);
    auto oh = TakeDigits(s, 2);
    if (!oh) return std::nullopt;
    TakeChar(s, ':');
    auto om = TakeDigits(s, 2);
    if (!om) return std::nullopt;
    offset = sign * (*oh * 3600 + *om * 60);
  }
  if (!s.empty()) return std::nullopt;

  const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
  return static_cast<Timestamp>(days) * 86400 + hour * 3600 + minute * 60 + second -
         offset;
}

ParseResult ParseMatchLog(std::istream& in, const ParseOptions& options) {
  ParseResult result;
  IngestStats& stats = result.stats;

  std::string line;
  if (!std::getline(in, line)) return result;
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = SplitFields(line, options.delimiter);
  const int c_match = FindColumn(header, {"match_id"});
  const int c_date = FindColumn(header, {"date", "timestamp"});
  const int c_player = FindColumn(header, {"player_id", "player_name"});
  const int c_place = FindColumn(header, {"placement", "team_placement"});
  const int c_party = FindColumn(header, {"party_size"});
  if (c_match < 0 || c_date < 0 || c_player < 0 || c_place < 0 || c_party < 0) {
    throw IngestError(
        "header must name match_id, date, player_id, placement and party_size; got: " +
        line);
  }
  const int needed = std::max({c_match, c_date, c_player, c_place, c_party});

  std::map<std::string, RawMatch> groups;
  std::map<std::string, std::unordered_set<std::string>> seen;
  std::unordered_set<std::string> duplicated;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    ++stats.rows_read;
    std::vector<std::string> fields;
    try {
      fields = SplitFields(line, options.delimiter);
    } catch (const std::runtime_error&) {
      ++stats.rows_unparseable;
      continue;
    }
    if (static_cast<int>(fields.size()) <= needed) {
      ++stats.rows_unparseable;
      continue;
    }
    const auto ts = ParseTimestamp(fields[c_date]);
    const auto placement = ParseNumber<int>(fields[c_place]);
    const auto party = ParseNumber<int>(fields[c_party]);
    const std::string& match_id = fields[c_match];
    const std::string& player = fields[c_player];
    if (!ts || !placement || !party || *placement < 1 || match_id.empty() ||
        player.empty()) {
      ++stats.rows_unparseable;
      continue;
    }
    if (*party != 1) {
      ++stats.rows_non_solo;
      continue;
    }
    auto [it, inserted] = groups.try_emplace(match_id, RawMatch{*ts, {}});
    if (!inserted) it->second.timestamp = std::min(it->second.timestamp, *ts);
    if (!seen[match_id].insert(player).second) duplicated.insert(match_id);
    it->second.entries.push_back({player, *placement});
  }

  for (auto& [match_id, raw] : groups) {
    if (duplicated.count(match_id)) {
      ++stats.matches_duplicate_player;
      stats.diagnostics.push_back("match " + match_id +
                                  " rejected: a player appears more than once");
      continue;
    }
    if (raw.entries.size() < 2) {
      ++stats.matches_too_small;
      continue;
    }
    result.matches.push_back(Repair(match_id, std::move(raw), options, stats));
  }
  // std::map iteration already orders by match_id, so a stable sort on the
  // timestamp gives the (timestamp, match_id) order.
  std::stable_sort(result.matches.begin(), result.matches.end(),
                   [](const MatchRecord& a, const MatchRecord& b) {
                     return a.timestamp < b.timestamp;
                   });
  return result;
}

ParseResult ParseMatchLogFile(const std::filesystem::path& path,
                              const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  return ParseMatchLog(in, options);
}

void WriteMatchLog(std::ostream& out, std::span<const MatchRecord> matches,
                   char delimiter) {
  const char d = delimiter;
  out << "match_id" << d << "date" << d << "player_id" << d << "placement" << d
      << "party_size\n";
  for (const auto& m : matches) {
    for (const auto& e : m.entries) {
      out << QuoteField(m.match_id, d) << d << m.timestamp << d
          << QuoteField(e.player.str(), d) << d
          << e.observed_rank << d << 1 << '\n';
    }
  }
}

}  // namespace ffarank
