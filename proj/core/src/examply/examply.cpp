#include "rewind/examply/examply.hpp"

#include <array>
#include <cctype>
#include <string_view>

#include "rewind/combinators.hpp"
#include "rewind/examply/indent.hpp"
#include "rewind/examply/types.hpp"

namespace rwd::examply {

namespace {

constexpr std::array<std::string_view, 9> kKeywords = {
    "val", "var", "fun", "class", "alias", "import", "Int", "String", "Bool"};

bool is_keyword(std::string_view s) {
  for (std::string_view k : kKeywords) {
    if (k == s) return true;
  }
  return false;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

ParserPtr keyword(const std::string& k) {
  return lexeme('"' + k + '"', seq(str(k), not_(char_pred(ident_char, "identifier character"))));
}

ParserPtr identifier() {
  auto raw = capture(seq(char_pred(ident_start, "letter"),
                         zero_more(char_pred(ident_char, "identifier character"))));
  auto not_reserved = predicate(
      [](ParseContext& ctx) { return !is_keyword(ctx.state<AstStack>().peek()->as_string()); },
      "reserved word");
  return lexeme("identifier", seq(raw, not_reserved));
}

ParserPtr string_body() {
  auto ch = seq(not_(char_pred([](char c) { return c == '"' || c == '\n'; }, "quote")), any_char());
  return lexeme("string literal", seq(str("\""), capture(zero_more(ch)), str("\"")));
}

ParserPtr comma_list(ParserPtr item) {
  return collect(seq(word("("), opt(seq(item, zero_more(seq(word(","), item)))), word(")")));
}

}  // namespace

void add_examply_rules(GrammarDef& g) {
  g.require_cell<IndentMap>();
  g.require_cell<IndentStack>();
  g.require_cell<TypeStack>();
  g.require_cell<EnclosingClasses>();

  g.rule("iden", identifier());

  g.rule("type", choice(lexeme("type", seq(capture(choice(str("Int"), str("String"), str("Bool"))),
                                           not_(char_pred(ident_char, "identifier character")))),
                        type_name(ref("iden"))));

  g.rule("int_lit",
         node("IntLit", 1,
              lexeme("integer literal",
                     capture(one_more(char_pred(
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; },
                         "digit"))))));
  g.rule("str_lit", node("StrLit", 1, string_body()));
  g.rule("args", comma_list(ref("expr")));

  // Constructor call: only when the identifier names a type. The optional
  // body is an anonymous subclass, so its declarations see the class's
  // private types.
  g.rule("anon_body", scoped(seq(anon_class_inherit(), ref("class_body"))));
  g.rule("ctor_call", node("CtorCall", 3,
                           seq(class_guard(ref("iden")), ref("iden"), ref("args"),
                               maybe(ref("anon_body")))));

  g.rule("call", build(seq(ref("iden"), ref("args"), maybe(ref("block"))), 3,
                       [](std::vector<AstValue> v) {
                         if (v[2].is_none()) return AstNode{"Call", {v[0], v[1]}, {}};
                         return AstNode{"CallWithBlock", std::move(v), {}};
                       }));

  g.rule("expr", choice(ref("ctor_call"), ref("call"), ref("int_lit"), ref("str_lit"),
                        node("Name", 1, ref("iden"))));

  auto type_annotation = maybe(seq(word(":"), ref("type")));

  g.rule("val", node("Val", 3, seq(keyword("val"), ref("iden"), type_annotation,
                                   maybe(seq(word("="), ref("expr"))))));
  g.rule("var", node("Var", 3, seq(keyword("var"), ref("iden"), type_annotation,
                                   maybe(seq(word("="), ref("expr"))))));

  g.rule("param", node("Param", 2, seq(ref("iden"), word(":"), ref("type"))));
  g.rule("fun", node("Fun", 4, seq(keyword("fun"), ref("iden"), comma_list(ref("param")),
                                   type_annotation, maybe(ref("block")))));

  g.rule("class", node("Class", 3, seq(keyword("class"), new_type(ref("iden")),
                                       maybe(seq(word(":"), superclass(ref("type")))),
                                       class_def(maybe(ref("class_body"))))));
  g.rule("alias", node("Alias", 2, seq(keyword("alias"),
                                       new_type(seq(ref("iden"), word("="), ref("type")), true))));
  g.rule("import", node("Import", 2, seq(keyword("import"), string_body(), new_type(ref("iden")))));

  g.rule("decl", choice(ref("val"), ref("var"), ref("fun"), ref("class"), ref("alias"),
                        ref("import")));

  g.rule("statement", seq(aligned_parser(), choice(ref("decl"), ref("expr")), newline_parser()));
  g.rule("decl_statement", seq(aligned_parser(), ref("decl"), newline_parser()));

  // Statement blocks hide the types they declare; class bodies leave that to
  // class_def, which needs to see them.
  g.rule("block", collect(seq(newline_parser(), indent_parser(),
                              scoped(until(ref("statement"), dedent_parser())))));
  g.rule("class_body", indented_block(ref("decl_statement")));

  g.rule("program", seq(build_indent_map(), collect(zero_more(ref("statement")))));
  g.root("program");
}

GrammarDef examply_definition() {
  GrammarDef g;
  add_examply_rules(g);
  return g;
}

const FrozenGrammar& examply_grammar() {
  static const FrozenGrammar g = examply_definition().freeze();
  return g;
}

}  // namespace rwd::examply
