#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace agentfact {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Model output failed structural validation against its expected schema.
class SchemaViolation : public Error {
 public:
  SchemaViolation(std::string field, std::string reason)
      : Error("schema violation at '" + field + "': " + reason),
        field_(std::move(field)),
        reason_(std::move(reason)) {}

  const std::string& field() const noexcept { return field_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string field_;
  std::string reason_;
};

// A reasoning or explanation output cited an evidence id that was never supplied.
class CitationOutOfPool : public SchemaViolation {
 public:
  CitationOutOfPool(std::string field, std::string cited_id)
      : SchemaViolation(std::move(field), "cited evidence id '" + cited_id +
                                              "' is not in the supplied pool"),
        cited_id_(std::move(cited_id)) {}

  const std::string& cited_id() const noexcept { return cited_id_; }

 private:
  std::string cited_id_;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

// Strict replay could not find a fixture for the request key.
class ReplayMiss : public Error {
 public:
  ReplayMiss(std::string provider_kind, std::string key)
      : Error("replay miss for " + provider_kind + " request key " + key),
        provider_kind_(std::move(provider_kind)),
        key_(std::move(key)) {}

  const std::string& provider_kind() const noexcept { return provider_kind_; }
  const std::string& key() const noexcept { return key_; }

 private:
  std::string provider_kind_;
  std::string key_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(int limit)
      : Error("chat call budget of " + std::to_string(limit) + " exhausted"),
        limit_(limit) {}

  int limit() const noexcept { return limit_; }

 private:
  int limit_;
};

class ProviderUnavailable : public Error {
 public:
  using Error::Error;
};

// Backend answered, but with something unusable (bad status, out-of-range score).
class ProviderError : public Error {
 public:
  using Error::Error;
};

class ImageDecodeError : public Error {
 public:
  using Error::Error;
};

class StoreIOError : public Error {
 public:
  using Error::Error;
};

class HtmlParseError : public Error {
 public:
  using Error::Error;
};

// Corpus annotation extraction hallucinated a link that is not in the article.
class LinkNotInArticle : public Error {
 public:
  LinkNotInArticle(std::string stage, std::string url)
      : Error("annotation stage '" + stage + "' returned link not present in article: " + url),
        stage_(std::move(stage)),
        url_(std::move(url)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& url() const noexcept { return url_; }

 private:
  std::string stage_;
  std::string url_;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class TemplateError : public Error {
 public:
  using Error::Error;
};

}  // namespace agentfact
