#ifndef FFARANK_CSV_H_
#define FFARANK_CSV_H_

#include <string>
#include <vector>

namespace ffarank {

// Splits one delimited line. Fields may be double-quoted; inside quotes a
// backslash escapes the next character. Surrounding blanks are trimmed.
// Throws std::runtime_error on malformed quoting.
std::vector<std::string> SplitFields(const std::string& line, char delimiter);

// Inverse of SplitFields for a single field: quotes only when needed.
std::string QuoteField(const std::string& field, char delimiter);

}  // namespace ffarank

#endif  // FFARANK_CSV_H_
