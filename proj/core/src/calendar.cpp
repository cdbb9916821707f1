// SPDX-License-Identifier: Apache-2.0

#include "covtrends/calendar.hpp"

#include <charconv>
#include <cstdio>

#include "covtrends/errors.hpp"

namespace covtrends {

namespace {

bool is_leap(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

// Parses exactly `width` ASCII digits starting at s[pos].
std::optional<int> fixed_digits(std::string_view s, std::size_t pos, int width) {
  if (pos + static_cast<std::size_t>(width) > s.size()) return std::nullopt;
  int value = 0;
  for (int i = 0; i < width; ++i) {
    char c = s[pos + static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

bool is_valid_date(const Date& d) {
  if (d.month < 1 || d.month > 12) return false;
  if (d.day < 1 || d.day > days_in_month(d.year, d.month)) return false;
  return true;
}

std::int64_t days_from_civil(const Date& d) {
  std::int64_t y = d.year;
  const std::int64_t m = d.month;
  const std::int64_t day = d.day;
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const std::int64_t yoe = y - era * 400;                                   // [0, 399]
  const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1;  // [0, 365]
  const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;           // [0, 146096]
  return era * 146097 + doe - 719468;
}

Date civil_from_days(std::int64_t days) {
  days += 719468;
  const std::int64_t era = (days >= 0 ? days : days - 146096) / 146097;
  const std::int64_t doe = days - era * 146097;                                  // [0, 146096]
  const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;  // [0, 399]
  const std::int64_t y = yoe + era * 400;
  const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);  // [0, 365]
  const std::int64_t mp = (5 * doy + 2) / 153;                      // [0, 11]
  const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;              // [1, 31]
  const std::int64_t m = mp + (mp < 10 ? 3 : -9);                   // [1, 12]
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

Weekday weekday(const Date& d) {
  // 1970-01-01 (day 0) was a Thursday.
  const std::int64_t days = days_from_civil(d);
  return static_cast<Weekday>(((days + 3) % 7 + 7) % 7);
}

Date add_days(const Date& d, std::int64_t n) {
  return civil_from_days(days_from_civil(d) + n);
}

Date UtcTime::date() const {
  std::int64_t days = seconds_since_epoch / 86400;
  if (seconds_since_epoch < 0 && seconds_since_epoch % 86400 != 0) --days;
  return civil_from_days(days);
}

std::optional<Date> parse_iso_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto y = fixed_digits(s, 0, 4);
  auto m = fixed_digits(s, 5, 2);
  auto d = fixed_digits(s, 8, 2);
  if (!y || !m || !d) return std::nullopt;
  Date date{*y, *m, *d};
  if (!is_valid_date(date)) return std::nullopt;
  return date;
}

std::optional<UtcTime> parse_iso_timestamp(std::string_view s) {
  if (s.size() < 19) return std::nullopt;
  auto date = parse_iso_date(s.substr(0, 10));
  if (!date) return std::nullopt;
  if (s[10] != 'T' && s[10] != ' ') return std::nullopt;
  auto hh = fixed_digits(s, 11, 2);
  auto mm = fixed_digits(s, 14, 2);
  auto ss = fixed_digits(s, 17, 2);
  if (!hh || !mm || !ss || s[13] != ':' || s[16] != ':') return std::nullopt;
  if (*hh > 23 || *mm > 59 || *ss > 60) return std::nullopt;  // allow leap second
  std::size_t pos = 19;
  if (pos < s.size() && (s[pos] == '.' || s[pos] == ',')) {
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }
  std::int64_t offset_seconds = 0;
  if (pos < s.size()) {
    const char c = s[pos];
    if (c == 'Z' || c == 'z') {
      ++pos;
    } else if (c == '+' || c == '-') {
      const int sign = c == '+' ? 1 : -1;
      ++pos;
      auto oh = fixed_digits(s, pos, 2);
      if (!oh) return std::nullopt;
      pos += 2;
      if (pos < s.size() && s[pos] == ':') ++pos;
      auto om = fixed_digits(s, pos, 2);
      if (!om) return std::nullopt;
      pos += 2;
      if (*oh > 23 || *om > 59) return std::nullopt;
      offset_seconds = sign * (*oh * 3600 + *om * 60);
    } else {
      return std::nullopt;
    }
  }
  if (pos != s.size()) return std::nullopt;
  const std::int64_t local =
      days_from_civil(*date) * 86400 + *hh * 3600 + *mm * 60 + std::min(*ss, 59);
  return UtcTime{local - offset_seconds};
}

std::optional<Date> parse_mdy_date(std::string_view s) {
  int fields[3] = {0, 0, 0};
  int field = 0;
  int digits = 0;
  for (char c : s) {
    if (c == '/') {
      if (digits == 0 || field == 2) return std::nullopt;
      ++field;
      digits = 0;
    } else if (c >= '0' && c <= '9') {
      if (++digits > 4) return std::nullopt;
      fields[field] = fields[field] * 10 + (c - '0');
    } else {
      return std::nullopt;
    }
  }
  if (field != 2 || digits == 0) return std::nullopt;
  int year = fields[2];
  if (year < 100) year += 2000;
  Date d{year, fields[0], fields[1]};
  if (!is_valid_date(d)) return std::nullopt;
  return d;
}

std::string format_iso_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::vector<Date> tuesdays_in_range(const Date& start, const Date& end) {
  if (!is_valid_date(start) || !is_valid_date(end))
    throw ArgumentError("tuesdays_in_range: invalid date");
  if (start > end)
    throw ArgumentError("tuesdays_in_range: start " + format_iso_date(start) +
                        " is after end " + format_iso_date(end));
  std::int64_t day = days_from_civil(start);
  const std::int64_t last = days_from_civil(end);
  // Advance to the first Tuesday at or after `start`.
  const int wd = static_cast<int>(weekday(start));
  const int ahead = (static_cast<int>(Weekday::Tuesday) - wd + 7) % 7;
  day += ahead;
  std::vector<Date> out;
  for (; day <= last; day += 7) out.push_back(civil_from_days(day));
  return out;
}

}  // namespace covtrends
