#pragma once

// Small context-sensitive grammars.

#include <cstddef>
#include <string>

#include "rewind/grammar.hpp"
#include "rewind/states.hpp"

namespace rwd::examply {

struct LetterCounts {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

class AnbncnCounts : public CopyState<LetterCounts> {
 public:
  std::string name() const override { return "AnbncnCounts"; }
};

class TagStack : public StackState<std::string> {
 public:
  std::string name() const override { return "TagStack"; }
};

/// a^n b^n c^n for n >= 0. Produces no AST.
const FrozenGrammar& demo_anbncn();

/// Nested `<name>...</name>` elements with free text between them; each
/// closing tag must match the innermost open one.
const FrozenGrammar& demo_matched_tags();

/// Left-recursive arithmetic: E <- E ("-" / "+") NUM / NUM, building
/// left-associated Sub/Add nodes.
const FrozenGrammar& demo_expr();

}  // namespace rwd::examply
