#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wdaug::text {

// Shared tokenization rule: lowercase (ASCII), split on Unicode whitespace,
// strip leading/trailing punctuation from each token, drop tokens that end
// up empty. "don't" and "self-esteem" survive intact.
std::vector<std::string> tokenize(std::string_view input);

// Join with single spaces.
std::string detokenize(const std::vector<std::string>& tokens);

// Collapse whitespace runs to single spaces and trim the ends.
std::string normalize_whitespace(std::string_view input);

std::string to_lower_ascii(std::string_view input);
std::string trim(std::string_view input);

// Case-insensitive, whitespace-normalized equality (dedup comparisons).
bool normalized_equal(std::string_view a, std::string_view b);

}  // namespace wdaug::text
