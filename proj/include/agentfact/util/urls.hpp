#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace agentfact::util {

struct UrlParts {
  std::string scheme;
  std::string host;  // lowercased
  std::string path;  // includes leading '/', empty if none; query/fragment stripped
};

// Accepts scheme://host[:port][/path...]. Returns nullopt for anything else.
std::optional<UrlParts> parse_url(std::string_view url);

// Lowercased host, or "" when the input is not an absolute URL.
std::string host_of(std::string_view url);

// eTLD+1 approximation: uses a small built-in list of common two-part public
// suffixes (co.uk, com.au, ...) and otherwise takes the last two labels.
std::string registrable_domain(std::string_view host);

// Lowercased extension of the path's final segment, without the dot.
std::string path_extension(std::string_view url);

}  // namespace agentfact::util
