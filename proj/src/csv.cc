#include "ffarank/csv.h"

#include <stdexcept>
#include <string_view>

#include <boost/tokenizer.hpp>

namespace ffarank {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<std::string> SplitFields(const std::string& line, char delimiter) {
  boost::escaped_list_separator<char> sep('\\', delimiter, '"');
  boost::tokenizer<boost::escaped_list_separator<char>> tok(line, sep);
  std::vector<std::string> fields;
  try {
    for (const auto& f : tok) fields.emplace_back(Trim(f));
  } catch (const boost::escaped_list_error& e) {
    throw std::runtime_error(std::string("malformed quoting: ") + e.what());
  }
  return fields;
}

std::string QuoteField(const std::string& field, char delimiter) {
  if (field.find_first_of(std::string{delimiter, '"', '\\', '\n'}) == std::string::npos &&
      Trim(field).size() == field.size()) {
    return field;
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace ffarank
