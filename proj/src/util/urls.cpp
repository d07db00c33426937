#include "agentfact/util/urls.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "agentfact/util/strings.hpp"

namespace agentfact::util {

namespace {

bool valid_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '+' || c == '-' || c == '.';
  });
}

constexpr std::array<std::string_view, 22> kTwoPartSuffixes = {
    "co.uk",  "org.uk", "ac.uk",  "gov.uk", "com.au", "net.au", "org.au", "co.jp",
    "or.jp",  "ne.jp",  "co.in",  "co.nz",  "com.br", "com.cn", "com.mx", "com.ar",
    "com.tr", "co.za",  "com.sg", "com.hk", "co.kr",  "com.tw"};

}  // namespace

std::optional<UrlParts> parse_url(std::string_view url) {
  const auto sep = url.find("://");
  if (sep == std::string_view::npos) return std::nullopt;
  UrlParts parts;
  parts.scheme = to_lower(url.substr(0, sep));
  if (!valid_scheme(parts.scheme)) return std::nullopt;
  std::string_view rest = url.substr(sep + 3);
  const auto path_start = rest.find_first_of("/?#");
  std::string_view authority = rest.substr(0, path_start);
  // Strip userinfo and port.
  if (const auto at = authority.rfind('@'); at != std::string_view::npos)
    authority = authority.substr(at + 1);
  if (const auto colon = authority.find(':'); colon != std::string_view::npos)
    authority = authority.substr(0, colon);
  if (authority.empty()) return std::nullopt;
  parts.host = to_lower(authority);
  if (path_start != std::string_view::npos && rest[path_start] == '/') {
    std::string_view tail = rest.substr(path_start);
    const auto qf = tail.find_first_of("?#");
    parts.path = std::string(tail.substr(0, qf));
  }
  return parts;
}

std::string host_of(std::string_view url) {
  const auto parts = parse_url(url);
  return parts ? parts->host : std::string{};
}

std::string registrable_domain(std::string_view host) {
  const std::string h = to_lower(host);
  const auto labels = split(h, '.');
  if (labels.size() <= 2) return h;
  // Numeric hosts stay whole.
  if (std::all_of(h.begin(), h.end(),
                  [](unsigned char c) { return std::isdigit(c) || c == '.'; }))
    return h;
  const std::string last_two = labels[labels.size() - 2] + "." + labels.back();
  const bool two_part =
      std::find(kTwoPartSuffixes.begin(), kTwoPartSuffixes.end(), last_two) !=
      kTwoPartSuffixes.end();
  const size_t take = two_part ? 3 : 2;
  if (labels.size() <= take) return h;
  std::string out;
  for (size_t i = labels.size() - take; i < labels.size(); ++i) {
    if (!out.empty()) out += '.';
    out += labels[i];
  }
  return out;
}

std::string path_extension(std::string_view url) {
  std::string path;
  if (const auto parts = parse_url(url)) {
    path = parts->path;
  } else {
    const auto qf = url.find_first_of("?#");
    path = std::string(url.substr(0, qf));
  }
  const auto slash = path.rfind('/');
  const std::string segment = slash == std::string::npos ? path : path.substr(slash + 1);
  const auto dot = segment.rfind('.');
  if (dot == std::string::npos || dot + 1 == segment.size()) return {};
  return to_lower(std::string_view(segment).substr(dot + 1));
}

}  // namespace agentfact::util
