#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <typeindex>
#include <vector>

#include "rewind/ast.hpp"
#include "rewind/parser.hpp"

namespace rwd {

/// Reference to a rule by name. Acts as a stub until the grammar is frozen;
/// parsing through an unbound reference is a contract violation.
ParserPtr ref(std::string name);

/// Whitespace parser that consumes nothing.
ParserPtr no_whitespace();

using CellFactory = std::function<std::unique_ptr<StateCell>()>;

class FrozenGrammar;

/// Mutable grammar under construction: named rules, the root rule name, the
/// whitespace parser used by word()/lexeme(), and the state cells each parse
/// needs.
class GrammarDef {
 public:
  GrammarDef& rule(std::string name, ParserPtr p);
  bool has_rule(const std::string& name) const { return rules_.count(name) != 0; }
  ParserPtr get_rule(const std::string& name) const;

  GrammarDef& root(std::string name);
  GrammarDef& whitespace(ParserPtr p);

  GrammarDef& require_cell(std::type_index key, CellFactory make);
  template <class Cell>
  GrammarDef& require_cell() {
    return require_cell(typeid(Cell), [] { return std::make_unique<Cell>(); });
  }

  /// Resolves every reference and checks that each left-recursive cycle is
  /// wrapped in leftrec(). Throws ConfigurationError otherwise.
  FrozenGrammar freeze() const;

 private:
  friend class FrozenGrammar;
  std::map<std::string, ParserPtr> rules_;
  std::string root_;
  ParserPtr whitespace_;
  std::vector<std::pair<std::type_index, CellFactory>> cells_;
};

struct ParseOptions {
  /// Require the root to consume the whole input.
  bool full_match = true;
  /// When set, every aggregate state operation is logged here.
  std::ostream* trace = nullptr;
};

struct SourceError {
  std::size_t position = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;
};

struct ParseOutcome {
  bool success = false;
  /// AST stack contents on success, bottom first.
  std::vector<AstValue> ast;
  /// Furthest failure on failure.
  std::optional<SourceError> error;
  /// The finished context, for inspecting state after the parse.
  std::shared_ptr<ParseContext> context;
};

/// Immutable, shareable grammar with all references bound.
class FrozenGrammar {
 public:
  const Parser& root() const { return *data_->root; }
  ParserPtr rule(const std::string& name) const;
  std::vector<std::string> rule_names() const;

  /// Deterministic listing of every rule's combinator structure, showing
  /// references by name.
  std::string structure() const;

  /// Context with this grammar's cells, the AST stack and the left-recursion
  /// table registered, ready for a parse over `input`.
  std::shared_ptr<ParseContext> make_context(std::string_view input) const;

  ParseOutcome parse(std::string_view input, const ParseOptions& options = {}) const;

 private:
  friend class GrammarDef;
  struct Data {
    std::map<std::string, ParserPtr> rules;
    ParserPtr root;
    ParserPtr whitespace;
    std::vector<std::pair<std::type_index, CellFactory>> cells;
  };
  explicit FrozenGrammar(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

inline ParseOutcome run_parse(const FrozenGrammar& g, std::string_view input,
                              const ParseOptions& options = {}) {
  return g.parse(input, options);
}

/// Throws ConfigurationError naming a cycle of parsers that can re-enter
/// themselves without consuming input and without passing through leftrec().
/// `names` labels rule roots in the message.
void check_recursion_annotated(const std::vector<const Parser*>& roots,
                               const std::map<const Parser*, std::string>& names);

}  // namespace rwd
