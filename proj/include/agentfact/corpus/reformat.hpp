#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agentfact/util/dates.hpp"

namespace agentfact {

enum class UrlKind { Image, Video, Web };

// By file extension of the path segment: jpg/jpeg/png/gif/webp are images,
// mp4/mov/avi/webm/m3u8 are videos, everything else is a webpage.
UrlKind classify_url(std::string_view url);

std::string to_string(UrlKind kind);
std::string url_tag(UrlKind kind, const std::string& url);  // "[IMAGE:url]"

struct TaggedUrl {
  UrlKind kind;
  std::string url;
  bool operator==(const TaggedUrl&) const = default;
};

struct ArticleMeta {
  std::string article_id;
  std::string article_url;
  std::string category;
  std::string headline;
  std::string claim;
  std::string raw_label;
  std::optional<util::Date> date;
};

struct TaggedArticle {
  ArticleMeta meta;
  // Visible text with [IMAGE:]/[VIDEO:]/[WEB:] tags interleaved at the
  // positions their elements held, whitespace collapsed, block breaks as '\n'.
  std::string interleaved_text;
  std::vector<TaggedUrl> urls;  // document order, duplicates preserved
  int word_count = 0;           // whitespace tokens of the tag-stripped text

  bool has_url(std::string_view url) const;
};

// Tokenizes the HTML (scripts, styles and comments skipped; entities decoded)
// and produces the tagged text form. Throws HtmlParseError on constructs left
// open at end of input.
TaggedArticle reformat_article(const std::string& html, ArticleMeta meta);

// Removes the given image URLs (tags and url entries) from a tagged article.
TaggedArticle drop_images(const TaggedArticle& article,
                          const std::vector<std::string>& image_urls);

}  // namespace agentfact
