#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace rwd {

/// A failure message that is only rendered when someone asks for it.
/// Backtracking produces far more failures than are ever reported.
class Diagnostic {
 public:
  Diagnostic() = default;
  Diagnostic(const char* literal) : source_(std::string_view(literal)) {}  // NOLINT
  Diagnostic(std::string text) : source_(std::move(text)) {}              // NOLINT
  Diagnostic(std::function<std::string()> make) : source_(std::move(make)) {}  // NOLINT

  template <class F,
            class = std::enable_if_t<std::is_invocable_r_v<std::string, F> &&
                                     !std::is_convertible_v<F, std::string>>>
  Diagnostic(F make) : source_(std::function<std::string()>(std::move(make))) {}  // NOLINT

  std::string render() const;

 private:
  std::variant<std::string_view, std::string, std::function<std::string()>> source_;
};

struct Success {};

struct Failure {
  std::size_t position = 0;
  Diagnostic message;

  std::string render() const { return message.render(); }
};

class ParseResult {
 public:
  ParseResult(Success s) : value_(s) {}            // NOLINT
  ParseResult(Failure f) : value_(std::move(f)) {}  // NOLINT

  static ParseResult success() { return Success{}; }
  static ParseResult failure(std::size_t pos, Diagnostic msg) {
    return Failure{pos, std::move(msg)};
  }

  bool ok() const { return std::holds_alternative<Success>(value_); }
  explicit operator bool() const { return ok(); }

  /// Only valid on failures.
  const Failure& failure() const { return std::get<Failure>(value_); }

 private:
  std::variant<Success, Failure> value_;
};

}  // namespace rwd
