#include "agentfact/corpus/reformat.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

#include "agentfact/errors.hpp"
#include "agentfact/util/strings.hpp"
#include "agentfact/util/urls.hpp"

namespace agentfact {

namespace {

constexpr std::array<std::string_view, 5> kImageExts = {"jpg", "jpeg", "png", "gif", "webp"};
constexpr std::array<std::string_view, 5> kVideoExts = {"mp4", "mov", "avi", "webm", "m3u8"};

bool is_block_tag(std::string_view name) {
  static const std::array<std::string_view, 26> kBlocks = {
      "p",       "div",     "br",      "hr",     "h1",         "h2",   "h3",
      "h4",      "h5",      "h6",      "li",     "ul",         "ol",   "table",
      "thead",   "tbody",   "tr",      "blockquote", "pre",    "section", "article",
      "header",  "footer",  "aside",   "figure", "figcaption"};
  return std::find(kBlocks.begin(), kBlocks.end(), name) != kBlocks.end();
}

bool is_skipped_container(std::string_view name) {
  return name == "script" || name == "style" || name == "noscript" || name == "title" ||
         name == "svg" || name == "iframe";
}

void append_utf8(std::string& out, uint32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string decode_entities(std::string_view text) {
  static const std::map<std::string_view, std::string_view> kNamed = {
      {"amp", "&"},  {"lt", "<"},    {"gt", ">"},    {"quot", "\""},
      {"apos", "'"}, {"nbsp", " "},  {"ndash", "-"}, {"mdash", "-"},
      {"hellip", "..."}};
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '&') {
      out.push_back(text[i++]);
      continue;
    }
    const auto semi = text.find(';', i + 1);
    if (semi == std::string_view::npos || semi - i > 10) {
      out.push_back(text[i++]);
      continue;
    }
    const std::string_view body = text.substr(i + 1, semi - i - 1);
    if (!body.empty() && body[0] == '#') {
      uint32_t cp = 0;
      bool ok = body.size() > 1;
      if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
        for (size_t k = 2; k < body.size() && ok; ++k) {
          const char c = body[k];
          if (!std::isxdigit(static_cast<unsigned char>(c))) ok = false;
          cp = cp * 16 + (std::isdigit(static_cast<unsigned char>(c))
                              ? c - '0'
                              : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        }
      } else {
        for (size_t k = 1; k < body.size() && ok; ++k) {
          if (!std::isdigit(static_cast<unsigned char>(body[k]))) ok = false;
          cp = cp * 10 + (body[k] - '0');
        }
      }
      if (ok && cp > 0 && cp <= 0x10FFFF) {
        append_utf8(out, cp);
        i = semi + 1;
        continue;
      }
    } else if (const auto it = kNamed.find(body); it != kNamed.end()) {
      out.append(it->second);
      i = semi + 1;
      continue;
    }
    out.push_back(text[i++]);
  }
  return out;
}

struct Token {
  enum Kind { Word, UrlTag, Break } kind;
  std::string text;
};

class Tokenizer {
 public:
  explicit Tokenizer(const std::string& html) : html_(html) {}

  void run() {
    std::string pending;
    while (pos_ < html_.size()) {
      const auto lt = html_.find('<', pos_);
      if (lt == std::string::npos) {
        pending += decode_entities(std::string_view(html_).substr(pos_));
        pos_ = html_.size();
        break;
      }
      pending += decode_entities(std::string_view(html_).substr(pos_, lt - pos_));
      pos_ = lt;
      if (!try_markup(pending)) {
        pending.push_back('<');  // literal '<' that opens no construct
        ++pos_;
      }
    }
    flush_words(pending);
  }

  std::vector<Token> tokens;
  std::vector<TaggedUrl> urls;

 private:
  void flush_words(std::string& pending) {
    for (auto& word : util::split_whitespace(pending))
      tokens.push_back({Token::Word, std::move(word)});
    pending.clear();
  }

  void emit_break(std::string& pending) {
    flush_words(pending);
    tokens.push_back({Token::Break, {}});
  }

  void emit_url(std::string& pending, const std::string& url) {
    flush_words(pending);
    const UrlKind kind = classify_url(url);
    tokens.push_back({Token::UrlTag, url_tag(kind, url)});
    urls.push_back({kind, url});
  }

  // Returns false when '<' at pos_ does not start markup.
  bool try_markup(std::string& pending) {
    if (pos_ + 1 >= html_.size()) throw HtmlParseError("dangling '<' at end of input");
    const char next = html_[pos_ + 1];
    if (html_.compare(pos_, 4, "<!--") == 0) {
      const auto end = html_.find("-->", pos_ + 4);
      if (end == std::string::npos) throw HtmlParseError("unterminated comment");
      pos_ = end + 3;
      return true;
    }
    if (next == '!' || next == '?') {
      const auto end = html_.find('>', pos_ + 1);
      if (end == std::string::npos) throw HtmlParseError("unterminated declaration");
      pos_ = end + 1;
      return true;
    }
    if (next == '/') {
      size_t i = pos_ + 2;
      const std::string name = read_name(i);
      if (name.empty()) return false;
      const auto end = html_.find('>', i);
      if (end == std::string::npos) throw HtmlParseError("unterminated closing tag </" + name);
      pos_ = end + 1;
      if (is_block_tag(name)) emit_break(pending);
      return true;
    }
    if (!std::isalpha(static_cast<unsigned char>(next))) return false;

    size_t i = pos_ + 1;
    const std::string name = read_name(i);
    bool self_closing = false;
    const auto attrs = read_attributes(i, name, self_closing);
    pos_ = i;

    if (is_skipped_container(name)) {
      if (!self_closing) skip_container(name);
      return true;
    }
    if (name == "a") {
      if (const auto it = attrs.find("href"); it != attrs.end() && !it->second.empty())
        emit_url(pending, it->second);
    } else if (name == "img" || name == "video" || name == "source") {
      if (const auto it = attrs.find("src"); it != attrs.end() && !it->second.empty())
        emit_url(pending, it->second);
    }
    if (is_block_tag(name)) emit_break(pending);
    return true;
  }

  std::string read_name(size_t& i) {
    std::string name;
    while (i < html_.size()) {
      const char c = html_[i];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == ':') {
        name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        ++i;
      } else {
        break;
      }
    }
    return name;
  }

  std::map<std::string, std::string> read_attributes(size_t& i, const std::string& tag_name,
                                                     bool& self_closing) {
    std::map<std::string, std::string> attrs;
    while (true) {
      while (i < html_.size() && std::isspace(static_cast<unsigned char>(html_[i]))) ++i;
      if (i >= html_.size()) throw HtmlParseError("unterminated tag <" + tag_name);
      if (html_[i] == '>') {
        ++i;
        return attrs;
      }
      if (html_[i] == '/') {
        ++i;
        size_t peek = i;
        while (peek < html_.size() && std::isspace(static_cast<unsigned char>(html_[peek])))
          ++peek;
        if (peek < html_.size() && html_[peek] == '>') self_closing = true;
        continue;
      }
      std::string name;
      while (i < html_.size() && html_[i] != '=' && html_[i] != '>' && html_[i] != '/' &&
             !std::isspace(static_cast<unsigned char>(html_[i]))) {
        name.push_back(
            static_cast<char>(std::tolower(static_cast<unsigned char>(html_[i]))));
        ++i;
      }
      if (i >= html_.size()) throw HtmlParseError("unterminated tag <" + tag_name);
      std::string value;
      if (html_[i] == '=') {
        ++i;
        while (i < html_.size() && std::isspace(static_cast<unsigned char>(html_[i]))) ++i;
        if (i >= html_.size()) throw HtmlParseError("unterminated tag <" + tag_name);
        if (html_[i] == '"' || html_[i] == '\'') {
          const char quote = html_[i++];
          const auto end = html_.find(quote, i);
          if (end == std::string::npos)
            throw HtmlParseError("unterminated attribute value in <" + tag_name);
          value = html_.substr(i, end - i);
          i = end + 1;
        } else {
          while (i < html_.size() && html_[i] != '>' &&
                 !std::isspace(static_cast<unsigned char>(html_[i]))) {
            value.push_back(html_[i]);
            ++i;
          }
        }
      }
      if (!name.empty()) attrs.emplace(name, decode_entities(value));
    }
  }

  void skip_container(const std::string& name) {
    const std::string needle = "</" + name;
    size_t i = pos_;
    while (true) {
      const auto hit = html_.find('<', i);
      if (hit == std::string::npos) throw HtmlParseError("unterminated <" + name + "> content");
      if (html_.size() - hit >= needle.size()) {
        bool match = true;
        for (size_t k = 0; k < needle.size(); ++k) {
          if (std::tolower(static_cast<unsigned char>(html_[hit + k])) !=
              static_cast<unsigned char>(needle[k])) {
            match = false;
            break;
          }
        }
        if (match) {
          const auto end = html_.find('>', hit);
          if (end == std::string::npos)
            throw HtmlParseError("unterminated closing tag for <" + name + ">");
          pos_ = end + 1;
          return;
        }
      }
      i = hit + 1;
    }
  }

  const std::string& html_;
  size_t pos_ = 0;
};

}  // namespace

UrlKind classify_url(std::string_view url) {
  const std::string ext = util::path_extension(url);
  if (std::find(kImageExts.begin(), kImageExts.end(), ext) != kImageExts.end())
    return UrlKind::Image;
  if (std::find(kVideoExts.begin(), kVideoExts.end(), ext) != kVideoExts.end())
    return UrlKind::Video;
  return UrlKind::Web;
}

std::string to_string(UrlKind kind) {
  switch (kind) {
    case UrlKind::Image: return "IMAGE";
    case UrlKind::Video: return "VIDEO";
    case UrlKind::Web: return "WEB";
  }
  return "WEB";
}

std::string url_tag(UrlKind kind, const std::string& url) {
  return "[" + to_string(kind) + ":" + url + "]";
}

bool TaggedArticle::has_url(std::string_view url) const {
  return std::any_of(urls.begin(), urls.end(),
                     [&](const TaggedUrl& t) { return t.url == url; });
}

TaggedArticle reformat_article(const std::string& html, ArticleMeta meta) {
  Tokenizer tokenizer(html);
  tokenizer.run();

  TaggedArticle article;
  article.meta = std::move(meta);
  article.urls = std::move(tokenizer.urls);

  std::vector<std::string> lines;
  std::vector<std::string> current;
  int words = 0;
  for (auto& token : tokenizer.tokens) {
    switch (token.kind) {
      case Token::Word:
        ++words;
        current.push_back(std::move(token.text));
        break;
      case Token::UrlTag:
        current.push_back(std::move(token.text));
        break;
      case Token::Break:
        if (!current.empty()) {
          lines.push_back(util::join(current, " "));
          current.clear();
        }
        break;
    }
  }
  if (!current.empty()) lines.push_back(util::join(current, " "));
  article.interleaved_text = util::join(lines, "\n");
  article.word_count = words;
  return article;
}

TaggedArticle drop_images(const TaggedArticle& article,
                          const std::vector<std::string>& image_urls) {
  TaggedArticle out = article;
  if (image_urls.empty()) return out;
  const auto dropped = [&](const std::string& url) {
    return std::find(image_urls.begin(), image_urls.end(), url) != image_urls.end();
  };
  out.urls.clear();
  for (const auto& t : article.urls)
    if (!(t.kind == UrlKind::Image && dropped(t.url))) out.urls.push_back(t);
  std::string text = article.interleaved_text;
  for (const auto& url : image_urls) {
    const std::string tag = url_tag(UrlKind::Image, url);
    size_t at;
    while ((at = text.find(tag)) != std::string::npos) {
      size_t begin = at, end = at + tag.size();
      // Tidy the spacing the tag leaves behind.
      if (begin > 0 && text[begin - 1] == ' ')
        --begin;
      else if (end < text.size() && text[end] == ' ')
        ++end;
      text.erase(begin, end - begin);
    }
  }
  std::vector<std::string> lines;
  for (const auto& line : util::split(text, '\n')) {
    auto trimmed = util::trim(line);
    if (!trimmed.empty()) lines.push_back(std::move(trimmed));
  }
  out.interleaved_text = util::join(lines, "\n");
  return out;
}

}  // namespace agentfact
