#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace nephro {

/// Calendar date (proleptic Gregorian). Comparison is chronological.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  bool ok() const;
  /// Days since 1970-01-01.
  long to_days() const;
  /// ISO-8601 "YYYY-MM-DD".
  std::string to_string() const;

  /// Strict "YYYY-MM-DD"; nullopt on malformed or non-existent dates.
  static std::optional<Date> parse(std::string_view s);
  static Date from_days(long days);

  auto operator<=>(const Date&) const = default;
};

/// b - a in days.
long days_between(const Date& a, const Date& b);

Date add_days(const Date& d, long days);

}  // namespace nephro
