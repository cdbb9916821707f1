// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace covtrends {

// RFC-4180 reader: quoted fields, escaped quotes, embedded separators
// and newlines, CRLF or LF line endings.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Next record, or nullopt at end of input. Rows are never empty; a
  // blank line yields one empty field.
  std::optional<std::vector<std::string>> next_row();

  std::size_t rows_read() const { return rows_read_; }

 private:
  std::istream& in_;
  std::size_t rows_read_ = 0;
};

// Quotes a field iff it contains a comma, quote, CR or LF.
std::string csv_quote(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace covtrends
