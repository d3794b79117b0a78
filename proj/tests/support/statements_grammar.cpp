#include "statements_grammar.hpp"

#include <cctype>

#include "rewind/combinators.hpp"
#include "rewind/examply/indent.hpp"
#include "rewind/leftrec.hpp"

namespace rwd::testing {

namespace {

using namespace rwd::examply;

bool letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

ParserPtr kw(const std::string& k) {
  return lexeme('"' + k + '"', seq(str(k), not_(char_pred(letter, "letter"))));
}

// Plugged-in rules go first so they can claim input that starts like a name.
ParserPtr alternatives(const std::vector<std::string>& extra, std::vector<ParserPtr> base) {
  std::vector<ParserPtr> all;
  for (const std::string& name : extra) all.push_back(ref(name));
  for (ParserPtr& p : base) all.push_back(std::move(p));
  return choice(std::move(all));
}

}  // namespace

void add_statement_rules(GrammarDef& g, const StatementHooks& hooks) {
  g.require_cell<IndentMap>();
  g.require_cell<IndentStack>();

  auto reserved = [](ParseContext& ctx) {
    const std::string& s = ctx.state<AstStack>().peek()->as_string();
    return s != "let" && s != "def" && s != "print" && s != "if";
  };
  g.rule("name", lexeme("name", seq(capture(one_more(char_pred(letter, "letter"))),
                                    predicate(reserved, "reserved word"))));
  g.rule("number", node("Num", 1, lexeme("number", capture(one_more(char_pred(digit, "digit"))))));

  g.rule("atom", alternatives(hooks.atoms, {ref("number"), node("Var", 1, ref("name")),
                               seq(word("("), ref("expr"), word(")"))}));
  g.rule("expr", leftrec(choice(node("Plus", 2, seq(ref("expr"), word("+"), ref("atom"))),
                                ref("atom"))));

  g.rule("block", indented_block(ref("stmt")));
  g.rule("let", node("Let", 2, seq(kw("let"), ref("name"), word("="), ref("expr"))));
  g.rule("def", node("Def", 2, seq(kw("def"), ref("name"), word(":"), ref("block"))));
  g.rule("declaration", alternatives(hooks.declarations, {ref("let"), ref("def")}));

  g.rule("print", node("Print", 1, seq(kw("print"), ref("expr"))));
  g.rule("if", node("If", 2, seq(kw("if"), ref("expr"), word(":"), ref("block"))));

  g.rule("stmt", seq(aligned_parser(), choice(ref("declaration"), ref("print"), ref("if")),
                     newline_parser()));
  g.rule("program", seq(build_indent_map(), collect(zero_more(ref("stmt")))));
  g.root("program");
}

const FrozenGrammar& statements_grammar() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    add_statement_rules(d);
    return d.freeze();
  }();
  return g;
}

}  // namespace rwd::testing
