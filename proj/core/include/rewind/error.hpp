#pragma once

#include <stdexcept>
#include <string>

namespace rwd {

/// Misuse of a documented precondition by a parser or state author, such as
/// taking a diff against a snapshot that is not a prefix of the current
/// state. These indicate bugs in grammar code, not in the parsed input.
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A grammar or context that cannot be used as configured: unresolved rule
/// names, unguarded left-recursive cycles, missing state cells.
class ConfigurationError : public std::runtime_error {
 public:
  explicit ConfigurationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rwd
