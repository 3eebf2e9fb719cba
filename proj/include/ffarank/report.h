#ifndef FFARANK_REPORT_H_
#define FFARANK_REPORT_H_

#include <iosfwd>
#include <string>

#include "ffarank/analysis.h"
#include "ffarank/replay.h"

namespace ffarank {

// Shortest representation that parses back to the same double; "nan" for NaN.
std::string FormatDouble(double value);

// match_index,match_id,n_players,fraction_known,accuracy,mae,kendall_tau,mrr,ap,ndcg
void WriteSeries(std::ostream& out, const MetricSeries& series, char delimiter = ',');

// game_index,metric,mean,stderr,n
void WriteCohortCurves(std::ostream& out, const CohortCurves& curves, char delimiter = ',');

// bin,metric,mean,n  (bin 1 holds the best observed ranks)
void WriteBinTable(std::ostream& out, const BinTable& table, char delimiter = ',');

// player_id,mu,sigma,games_played  (sigma empty when the system has none)
void WriteRatingSnapshot(std::ostream& out, const RatingStore& store, char delimiter = ',');
RatingStore ReadRatingSnapshot(std::istream& in, char delimiter = ',');

// Mean of every metric over a series.
MetricValues SeriesMeans(const MetricSeries& series);

}  // namespace ffarank

#endif  // FFARANK_REPORT_H_
