#pragma once

// Examply: a small language with significant indentation whose grammar must
// know which identifiers name types in order to tell constructor calls with
// an anonymous-class body apart from function calls taking a block.
//
//   import "pkg.path" Name
//   val x: Type = expr          var y = expr
//   fun f(a: Type, b: Type): Type
//       statements...
//   class Name: Super
//       declarations...
//   alias Short = Name
//
// Expressions: integer and string literals, names, calls `f(args)` with an
// optional trailing indented block, and constructor calls `Type(args)` with an
// optional indented class body.

#include "rewind/grammar.hpp"

namespace rwd::examply {

/// Adds the Examply rules and required cells to `g` and sets root "program".
void add_examply_rules(GrammarDef& g);

GrammarDef examply_definition();

/// The frozen Examply grammar, built once.
const FrozenGrammar& examply_grammar();

}  // namespace rwd::examply
