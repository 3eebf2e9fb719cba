#ifndef FFARANK_INGEST_H_
#define FFARANK_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ffarank/core.h"

namespace ffarank {

// Unreadable input or a header lacking a required column.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParseOptions {
  char delimiter = ',';
  std::uint64_t seed = 0;  // tie repair
};

// Counters reported by the parser. Every skipped, rejected or repaired
// item is counted; `diagnostics` carries one line per rejected match.
struct IngestStats {
  std::size_t rows_read = 0;
  std::size_t rows_unparseable = 0;
  std::size_t rows_non_solo = 0;
  std::size_t matches_duplicate_player = 0;
  std::size_t matches_too_small = 0;
  std::size_t matches_repaired = 0;
  std::size_t tie_groups = 0;
  std::vector<std::string> diagnostics;
};

struct ParseResult {
  std::vector<MatchRecord> matches;
  IngestStats stats;
};

// Reads a delimited match log with a header row. Required columns:
// match_id, date, player_id, placement, party_size (player_name and
// team_placement are accepted as aliases). Rows with party_size != 1 are
// skipped. Placements are repaired to a dense 1..N order; tied placements
// are ordered by a coin flip seeded from (seed, match_id). Matches are
// returned oldest first, ties by match_id; entries by observed rank.
ParseResult ParseMatchLog(std::istream& in, const ParseOptions& options = {});
ParseResult ParseMatchLogFile(const std::filesystem::path& path,
                              const ParseOptions& options = {});

// Epoch seconds, or ISO-8601 "YYYY-MM-DD[THH:MM[:SS[.fff]]][Z|+HH[:]MM]".
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// Writes matches in the format ParseMatchLog reads (date as epoch seconds).
void WriteMatchLog(std::ostream& out, std::span<const MatchRecord> matches,
                   char delimiter = ',');

}  // namespace ffarank

#endif  // FFARANK_INGEST_H_
