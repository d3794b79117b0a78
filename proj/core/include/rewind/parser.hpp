#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rewind/context.hpp"
#include "rewind/result.hpp"

namespace rwd {

class Parser;
using ParserPtr = std::shared_ptr<const Parser>;

/// Every parser either succeeds, or fails having restored the position and
/// every state cell to their values on entry.
///
/// Parser objects are immutable once built and may be shared between
/// concurrent parses; all parse-time mutation goes through the context.
class Parser {
 public:
  using NullableFn = std::function<bool(const Parser*)>;

  virtual ~Parser() = default;

  virtual ParseResult parse(ParseContext& ctx) const = 0;

  /// Short structural label, e.g. `seq` or `str "val"`.
  virtual std::string kind() const = 0;

  virtual std::vector<const Parser*> children() const { return {}; }

  // Static analysis hooks used to find left-recursive cycles. The defaults
  // are conservative: a parser may match the empty string and may invoke
  // any of its children without consuming input first.
  virtual bool can_match_empty(const NullableFn& /*nullable*/) const { return true; }
  virtual std::vector<const Parser*> entry_children(const NullableFn& /*nullable*/) const {
    return children();
  }
  /// True for parsers that make re-entry at the same position safe.
  virtual bool guards_recursion() const { return false; }
};

/// zero_more(char_pred(isspace)).
ParserPtr default_whitespace();

/// Wraps an arbitrary parse function. The function must itself honour the
/// transactional contract.
ParserPtr custom(std::string kind, std::function<ParseResult(ParseContext&)> fn,
                 std::vector<ParserPtr> children = {});

}  // namespace rwd
