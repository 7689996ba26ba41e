#include "nephro/dates.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

namespace nephro {

namespace {
std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year{d.year} / d.month / d.day;
}
}  // namespace

bool Date::ok() const { return to_ymd(*this).ok(); }

long Date::to_days() const {
  return std::chrono::sys_days{to_ymd(*this)}.time_since_epoch().count();
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return std::string(buf);
}

std::optional<Date> Date::parse(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') {
    return std::nullopt;
  }
  Date d;
  auto parse_int = [](std::string_view field, int& out) {
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc() && ptr == field.data() + field.size();
  };
  if (!parse_int(s.substr(0, 4), d.year) || !parse_int(s.substr(5, 2), d.month) ||
      !parse_int(s.substr(8, 2), d.day)) {
    return std::nullopt;
  }
  if (!d.ok()) {
    return std::nullopt;
  }
  return d;
}

Date Date::from_days(long days) {
  std::chrono::sys_days sd{std::chrono::days{days}};
  std::chrono::year_month_day ymd{sd};
  return Date{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
              static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

long days_between(const Date& a, const Date& b) { return b.to_days() - a.to_days(); }

Date add_days(const Date& d, long days) { return Date::from_days(d.to_days() + days); }

}  // namespace nephro
