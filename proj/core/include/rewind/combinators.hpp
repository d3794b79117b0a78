#pragma once

// PEG-style combinators. Every constructed parser is transactional: on
// failure it leaves position and state exactly as it found them.
//
// Repetitions (zero_more, one_more, until) throw ContractViolation when an
// iteration succeeds without moving the position or changing any cell, since
// such a loop would never end.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "rewind/ast.hpp"
#include "rewind/parser.hpp"

namespace rwd {

using Effect = std::function<void(ParseContext&)>;
using Condition = std::function<bool(ParseContext&)>;

ParserPtr seq(std::vector<ParserPtr> children);
ParserPtr choice(std::vector<ParserPtr> children);

template <class... Ps>
ParserPtr seq(ParserPtr first, Ps... rest) {
  return seq(std::vector<ParserPtr>{std::move(first), std::move(rest)...});
}
template <class... Ps>
ParserPtr choice(ParserPtr first, Ps... rest) {
  return choice(std::vector<ParserPtr>{std::move(first), std::move(rest)...});
}

ParserPtr opt(ParserPtr p);
ParserPtr zero_more(ParserPtr p);
ParserPtr one_more(ParserPtr p);

/// Positive lookahead: succeeds iff `p` does, with no net effect.
ParserPtr ahead(ParserPtr p);
/// Negative lookahead: succeeds iff `p` fails, with no net effect.
ParserPtr not_(ParserPtr p);

/// One character satisfying `pred`. Never matches the end-of-input sentinel.
ParserPtr char_pred(std::function<bool(char)> pred, std::string label);
ParserPtr any_char();
ParserPtr str(std::string literal);
/// `literal` followed by the grammar's whitespace.
ParserPtr word(std::string literal);
/// The running grammar's whitespace parser, with its failures muted.
ParserPtr ws();
ParserPtr end_of_input();

/// Repeatedly: try `terminator` and stop if it matches (keeping its effects),
/// otherwise require `item`.
ParserPtr until(ParserPtr item, ParserPtr terminator);

ParserPtr predicate(Condition cond, Diagnostic msg);
ParserPtr predicate(Condition cond, std::function<Diagnostic(ParseContext&)> msg);
/// Runs `effect` for its state changes and succeeds.
ParserPtr perform(Effect effect);
inline ParserPtr success_after(Effect effect) { return perform(std::move(effect)); }
/// Runs `p`, then `effect` if `p` succeeded.
ParserPtr and_do(ParserPtr p, Effect effect);

/// Runs `p` with failure recording muted, then the grammar whitespace. On
/// failure, reports `expected <label>` at the token start.
ParserPtr lexeme(std::string label, ParserPtr p);

// -- AST construction (over the context's AstStack) ---------------------------

/// Pushes the text matched by `p` as a string.
ParserPtr capture(ParserPtr p);
/// Gathers every value `p` pushed into one list, first-pushed first.
ParserPtr collect(ParserPtr p);
/// Pops the `arity` values `p` pushed (in push order), builds a node from them
/// and pushes it with the span `p` matched.
ParserPtr build(ParserPtr p, std::size_t arity,
                std::function<AstNode(std::vector<AstValue>)> make);
/// build() producing a node of the given kind whose children are the values.
ParserPtr node(std::string kind, std::size_t arity, ParserPtr p);
/// Like opt(), but pushes an empty value when `p` fails.
ParserPtr maybe(ParserPtr p);
ParserPtr push_value(AstValue v);

}  // namespace rwd
