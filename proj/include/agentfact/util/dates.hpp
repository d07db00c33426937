#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace agentfact::util {

using Date = std::chrono::year_month_day;

// Strict ISO "YYYY-MM-DD". Throws std::invalid_argument on malformed or
// non-existent calendar dates.
Date parse_date(std::string_view s);

// Returns nullopt instead of throwing.
std::optional<Date> try_parse_date(std::string_view s);

std::string format_date(const Date& d);

}  // namespace agentfact::util
