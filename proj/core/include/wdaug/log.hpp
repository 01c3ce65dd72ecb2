#pragma once

#include <iostream>
#include <string>

namespace wdaug::log {

// Process-wide switch so tests can silence expected warnings.
inline bool& quiet() {
  static bool q = false;
  return q;
}

inline void warn(const std::string& message) {
  if (!quiet()) {
    std::cerr << "[wdaug] warning: " << message << "\n";
  }
}

inline void info(const std::string& message) {
  if (!quiet()) {
    std::cerr << "[wdaug] " << message << "\n";
  }
}

}  // namespace wdaug::log
