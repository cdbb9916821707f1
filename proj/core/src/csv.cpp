// SPDX-License-Identifier: Apache-2.0

#include "covtrends/csv.hpp"

#include <istream>
#include <ostream>

namespace covtrends {

std::optional<std::vector<std::string>> CsvReader::next_row() {
  int first = in_.peek();
  if (first == std::char_traits<char>::eof()) return std::nullopt;

  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  char c;
  while (in_.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get(c);
          field.push_back('"');
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      if (in_.peek() == '\n') in_.get(c);
      break;
    } else {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  ++rows_read_;
  return fields;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << csv_quote(fields[i]);
  }
  out.put('\n');
}

}  // namespace covtrends
