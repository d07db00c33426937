#pragma once

#include <string>
#include <string_view>

namespace agentfact {

// 3-class verdict vocabulary.
enum class VeracityLabel { True, False, Unproven };

// 2-class verdict vocabulary.
enum class BinaryLabel { True, NotTrue };

enum class SourceReliability { Reliable, Unreliable, Satire, Unsure, Factcheck };

enum class ImageRelationship { SameSource, SameEvent, NoClose };

// True collapses to true; False and Unproven collapse to not_true.
BinaryLabel collapse_to_binary(VeracityLabel v);

std::string to_string(VeracityLabel v);
std::string to_string(BinaryLabel b);
std::string to_string(SourceReliability r);
std::string to_string(ImageRelationship r);

// All parsers are case-insensitive and throw std::invalid_argument on
// unknown vocabulary.
VeracityLabel veracity_from_string(std::string_view s);
BinaryLabel binary_from_string(std::string_view s);
// Accepts the TRUE/FALSE vocabulary used by the explanation agent.
BinaryLabel binary_from_two_class(std::string_view s);
SourceReliability reliability_from_string(std::string_view s);
ImageRelationship relationship_from_string(std::string_view s);

}  // namespace agentfact
