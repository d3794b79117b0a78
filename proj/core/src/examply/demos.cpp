#include "rewind/examply/demos.hpp"

#include <cctype>

#include "rewind/combinators.hpp"
#include "rewind/leftrec.hpp"

namespace rwd::examply {

namespace {

ParserPtr count_run(char letter, std::size_t LetterCounts::*field) {
  return zero_more(and_do(str(std::string(1, letter)), [field](ParseContext& ctx) {
    ++(ctx.state<AnbncnCounts>().mutate().*field);
  }));
}

ParserPtr same_as_a(char letter, std::size_t LetterCounts::*field) {
  return predicate(
      [field](ParseContext& ctx) {
        const LetterCounts& n = ctx.state<AnbncnCounts>().get();
        return n.*field == n.a;
      },
      std::function<Diagnostic(ParseContext&)>([letter, field](ParseContext& ctx) -> Diagnostic {
        const LetterCounts n = ctx.state<AnbncnCounts>().get();
        return Diagnostic([letter, field, n] {
          return "expected " + std::to_string(n.a) + " '" + std::string(1, letter) +
                 "' characters, found " + std::to_string(n.*field);
        });
      }));
}

bool tag_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == ':';
}

ParserPtr closing_name() {
  return custom("closing_name", [](ParseContext& ctx) -> ParseResult {
    TagStack& tags = ctx.state<TagStack>();
    const std::string* open = tags.peek();
    if (open == nullptr) return ctx.fail("unexpected closing tag");
    const std::string_view rest = ctx.rest();
    if (rest.substr(0, open->size()) == *open && !tag_char(ctx.text()[ctx.pos() + open->size()])) {
      ctx.advance(open->size());
      tags.pop();
      return Success{};
    }
    const std::string expected = *open;
    return ctx.fail([expected] { return "expected closing tag for <" + expected + ">"; });
  });
}

}  // namespace

const FrozenGrammar& demo_anbncn() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    d.require_cell<AnbncnCounts>();
    d.whitespace(no_whitespace());
    d.rule("S", seq(count_run('a', &LetterCounts::a), count_run('b', &LetterCounts::b),
                    same_as_a('b', &LetterCounts::b), count_run('c', &LetterCounts::c),
                    same_as_a('c', &LetterCounts::c)));
    d.root("S");
    return d.freeze();
  }();
  return g;
}

const FrozenGrammar& demo_matched_tags() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    d.require_cell<TagStack>();
    d.whitespace(no_whitespace());
    auto name = capture(one_more(char_pred(tag_char, "tag name character")));
    auto open_tag = seq(str("<"), and_do(name, [](ParseContext& ctx) {
                          ctx.state<TagStack>().push(ctx.state<AstStack>().peek()->as_string());
                        }),
                        str(">"));
    auto close_tag = seq(str("</"), closing_name(), str(">"));
    d.rule("text", node("Text", 1, capture(one_more(char_pred([](char c) { return c != '<'; },
                                                              "text")))));
    d.rule("content", collect(zero_more(choice(ref("element"), ref("text")))));
    d.rule("element", node("Element", 2, seq(open_tag, ref("content"), close_tag)));
    d.root("content");
    return d.freeze();
  }();
  return g;
}

const FrozenGrammar& demo_expr() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    auto num = node("Num", 1,
                    lexeme("number", capture(one_more(char_pred(
                                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; },
                                         "digit")))));
    d.rule("NUM", num);
    d.rule("E", leftrec(choice(node("Sub", 2, seq(ref("E"), word("-"), ref("NUM"))),
                               node("Add", 2, seq(ref("E"), word("+"), ref("NUM"))),
                               ref("NUM"))));
    d.root("E");
    return d.freeze();
  }();
  return g;
}

}  // namespace rwd::examply
