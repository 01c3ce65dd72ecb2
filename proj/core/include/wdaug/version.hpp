#pragma once

namespace wdaug {

inline constexpr const char* kToolName = "wdaug";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace wdaug
