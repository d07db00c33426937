#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace agentfact::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Splits on runs of whitespace; no empty tokens.
std::vector<std::string> split_whitespace(std::string_view s);

// Collapses internal whitespace runs to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace agentfact::util
