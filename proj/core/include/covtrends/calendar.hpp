// SPDX-License-Identifier: Apache-2.0
//
// Proleptic-Gregorian calendar arithmetic on plain (year, month, day)
// triples, plus the ISO-8601 / M-D-YY parsers the file readers need.
// All times are UTC; a tweet's clock time is never used beyond
// extracting its calendar date and day of week.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covtrends {

enum class Weekday : int {
  Monday = 0,
  Tuesday,
  Wednesday,
  Thursday,
  Friday,
  Saturday,
  Sunday,
};

struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  auto operator<=>(const Date&) const = default;
};

bool is_valid_date(const Date& d);

// Days since 1970-01-01 (negative before). Howard Hinnant's civil-days
// algorithm; exact over the full int range used here.
std::int64_t days_from_civil(const Date& d);
Date civil_from_days(std::int64_t days);

Weekday weekday(const Date& d);
Date add_days(const Date& d, std::int64_t n);

// A UTC instant with second precision.
struct UtcTime {
  std::int64_t seconds_since_epoch = 0;

  Date date() const;
  auto operator<=>(const UtcTime&) const = default;
};

// "YYYY-MM-DD"; rejects invalid calendar dates.
std::optional<Date> parse_iso_date(std::string_view s);

// ISO-8601 timestamp: date, 'T' or ' ' separator, HH:MM:SS, optional
// fractional seconds (ignored), optional zone ('Z', +-HH:MM or +-HHMM;
// absent means UTC). Returns the instant converted to UTC.
std::optional<UtcTime> parse_iso_timestamp(std::string_view s);

// "M/D/YY" (or M/D/YYYY); two-digit years are 2000-based.
std::optional<Date> parse_mdy_date(std::string_view s);

std::string format_iso_date(const Date& d);

// All Tuesdays in [start, end], ascending. Throws ArgumentError if
// start > end or either date is invalid.
std::vector<Date> tuesdays_in_range(const Date& start, const Date& end);

}  // namespace covtrends
