#include "agentfact/util/dates.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace agentfact::util {

namespace {
bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}
}  // namespace

Date parse_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw std::invalid_argument("date not in YYYY-MM-DD form: '" + std::string(s) + "'");
  const auto ys = s.substr(0, 4), ms = s.substr(5, 2), ds = s.substr(8, 2);
  if (!all_digits(ys) || !all_digits(ms) || !all_digits(ds))
    throw std::invalid_argument("date not in YYYY-MM-DD form: '" + std::string(s) + "'");
  const int y = std::stoi(std::string(ys));
  const unsigned m = static_cast<unsigned>(std::stoi(std::string(ms)));
  const unsigned d = static_cast<unsigned>(std::stoi(std::string(ds)));
  const Date ymd{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!ymd.ok())
    throw std::invalid_argument("non-existent calendar date: '" + std::string(s) + "'");
  return ymd;
}

std::optional<Date> try_parse_date(std::string_view s) {
  try {
    return parse_date(s);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
  return buf;
}

}  // namespace agentfact::util
