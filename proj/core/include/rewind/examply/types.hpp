#pragma once

// Context-sensitive type visibility. The TypeStack lists every type visible at
// the current position, innermost last. A class record carries the private
// types declared in its body so that subclasses can bring them back into view.

#include <string>
#include <string_view>
#include <vector>

#include "rewind/parser.hpp"
#include "rewind/states.hpp"

namespace rwd::examply {

struct TypeRecord {
  std::string name;
  std::vector<TypeRecord> priv;
  friend bool operator==(const TypeRecord&, const TypeRecord&) = default;
};

class TypeStack : public MonotonicStack<TypeRecord> {
 public:
  std::string name() const override { return "TypeStack"; }
};

/// Names of the classes whose bodies enclose the current position.
class EnclosingClasses : public StackState<std::string> {
 public:
  std::string name() const override { return "EnclosingClasses"; }
};

bool is_type(const ParseContext& ctx, std::string_view name);

/// Private types of the innermost visible type called `name`; empty if none.
std::vector<TypeRecord> priv_of(const ParseContext& ctx, std::string_view name);

/// Pushes the private types of `name` onto the TypeStack.
void inherit(ParseContext& ctx, std::string_view name);

/// Runs `child`, then declares a type. Plain: the name is the string on top
/// of the AST stack and the type has no private types. Alias: the AST stack
/// holds the new name under the target name, and the alias shares the
/// target's private types.
ParserPtr new_type(ParserPtr child, bool alias = false);

/// Types declared inside `body` are dropped once it succeeds.
ParserPtr scoped(ParserPtr body);

/// Wraps a class body. Expects the class name under the superclass (a string,
/// or none) on the AST stack, with the class itself already declared. The
/// body sees the superclass's private types; afterwards every type the body
/// declared is folded into the class's record and hidden again.
ParserPtr class_def(ParserPtr body);

/// Superclass reference: `type` must name a visible type other than the class
/// being declared (the string on the AST stack top) or any class whose body
/// encloses this one. Failures are reported at the start of the name.
ParserPtr superclass(ParserPtr type);

/// For an anonymous subclass at a constructor call: inherits the private
/// types of the class named by the string one below the AST stack top.
ParserPtr anon_class_inherit();

/// Zero-width: succeeds iff `iden` matches here and names a visible type.
ParserPtr class_guard(ParserPtr iden);

/// `iden`, required to name a visible type. Failures are reported at the
/// start of the name.
ParserPtr type_name(ParserPtr iden);

}  // namespace rwd::examply
