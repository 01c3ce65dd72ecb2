#pragma once

#include <stdexcept>
#include <string>

namespace wdaug {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad CLI usage, unreadable/missing files, malformed inputs. Exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Corpus/config content that fails validation (bad label, duplicate id, ...).
class ParseError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A balance plan that cannot be computed or applied. Exit code 2.
class PlanError : public Error {
 public:
  using Error::Error;
};

// Remote provider failure that survived the retry policy. Exit code 3.
class ProviderError : public Error {
 public:
  using Error::Error;
};

}  // namespace wdaug
