#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace wdaug {

// The four wellness-dimension classes, in the fixed reporting order used
// everywhere (tables, confusion matrices, tie-breaking).
enum class Label : std::size_t { PA = 0, IVA = 1, SA = 2, SEA = 3 };

inline constexpr std::size_t kNumLabels = 4;

inline constexpr std::array<Label, kNumLabels> kLabels = {Label::PA, Label::IVA, Label::SA,
                                                          Label::SEA};

std::string_view label_code(Label label);       // "PA"
std::string_view label_long_name(Label label);  // "Physical Aspect"
std::optional<Label> parse_label(std::string_view code);

// How a record came to exist.
enum class Source : std::size_t { Original = 0, Eda = 1, Bt = 2, Llm = 3 };

std::string_view source_name(Source source);  // "original", "eda", ...
std::optional<Source> parse_source(std::string_view name);

}  // namespace wdaug
