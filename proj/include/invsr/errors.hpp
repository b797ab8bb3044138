#pragma once

#include <stdexcept>
#include <string>

namespace invsr {

/// Structurally malformed input: bad JSON, non-square table, out-of-range
/// index, duplicate labels. Distinct from an axiom failure.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// A size guard refused the request. Pass `force` to override.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor or operation was called outside its precondition
/// (e.g. mu with a not below b, tau without an identity element).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace invsr
