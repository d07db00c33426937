#include "agentfact/core/labels.hpp"

#include <stdexcept>

#include "agentfact/util/strings.hpp"

namespace agentfact {

using util::iequals;

BinaryLabel collapse_to_binary(VeracityLabel v) {
  return v == VeracityLabel::True ? BinaryLabel::True : BinaryLabel::NotTrue;
}

std::string to_string(VeracityLabel v) {
  switch (v) {
    case VeracityLabel::True: return "True";
    case VeracityLabel::False: return "False";
    case VeracityLabel::Unproven: return "Unproven";
  }
  return "Unproven";
}

std::string to_string(BinaryLabel b) {
  return b == BinaryLabel::True ? "true" : "not_true";
}

std::string to_string(SourceReliability r) {
  switch (r) {
    case SourceReliability::Reliable: return "reliable";
    case SourceReliability::Unreliable: return "unreliable";
    case SourceReliability::Satire: return "satire";
    case SourceReliability::Unsure: return "unsure";
    case SourceReliability::Factcheck: return "factcheck";
  }
  return "unsure";
}

std::string to_string(ImageRelationship r) {
  switch (r) {
    case ImageRelationship::SameSource: return "Potentially From Same Source";
    case ImageRelationship::SameEvent: return "Potentially From Same Event";
    case ImageRelationship::NoClose: return "No Close Relationship";
  }
  return "No Close Relationship";
}

VeracityLabel veracity_from_string(std::string_view s) {
  if (iequals(s, "true")) return VeracityLabel::True;
  if (iequals(s, "false")) return VeracityLabel::False;
  if (iequals(s, "unproven")) return VeracityLabel::Unproven;
  throw std::invalid_argument("unknown veracity label: '" + std::string(s) + "'");
}

BinaryLabel binary_from_string(std::string_view s) {
  if (iequals(s, "true")) return BinaryLabel::True;
  if (iequals(s, "not_true") || iequals(s, "not true")) return BinaryLabel::NotTrue;
  throw std::invalid_argument("unknown binary label: '" + std::string(s) + "'");
}

BinaryLabel binary_from_two_class(std::string_view s) {
  if (iequals(s, "true")) return BinaryLabel::True;
  if (iequals(s, "false")) return BinaryLabel::NotTrue;
  throw std::invalid_argument("unknown 2-class label: '" + std::string(s) + "'");
}

SourceReliability reliability_from_string(std::string_view s) {
  if (iequals(s, "reliable")) return SourceReliability::Reliable;
  if (iequals(s, "unreliable")) return SourceReliability::Unreliable;
  if (iequals(s, "satire")) return SourceReliability::Satire;
  if (iequals(s, "unsure")) return SourceReliability::Unsure;
  if (iequals(s, "factcheck")) return SourceReliability::Factcheck;
  throw std::invalid_argument("unknown reliability type: '" + std::string(s) + "'");
}

ImageRelationship relationship_from_string(std::string_view s) {
  if (iequals(s, "Potentially From Same Source")) return ImageRelationship::SameSource;
  if (iequals(s, "Potentially From Same Event")) return ImageRelationship::SameEvent;
  if (iequals(s, "No Close Relationship")) return ImageRelationship::NoClose;
  throw std::invalid_argument("unknown image relationship: '" + std::string(s) + "'");
}

}  // namespace agentfact
