#include <doctest.h>

#include <cctype>

#include "harness.hpp"
#include "rewind/combinators.hpp"
#include "rewind/examply/indent.hpp"
#include "rewind/grammar.hpp"
#include "tab_oracle.hpp"

using namespace rwd;
using namespace rwd::examply;
using rwd::testing::make_ctx;

namespace {

std::unique_ptr<ParseContext> indented(std::string_view input) {
  auto ctx = make_ctx<IndentMap, IndentStack>(input);
  REQUIRE(build_indent_map()->parse(*ctx));
  return ctx;
}

ParserPtr name() {
  return lexeme("name", capture(one_more(char_pred(
                            [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; },
                            "letter"))));
}

// statement <- aligned name (":" block)? newline
ParserPtr statement_grammar_root() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    d.require_cell<IndentMap>();
    d.require_cell<IndentStack>();
    d.rule("stmt", seq(aligned_parser(), node("S", 2, seq(name(), maybe(seq(word(":"), ref("block"))))),
                       newline_parser()));
    d.rule("block", indented_block(ref("stmt")));
    d.rule("program", seq(build_indent_map(), collect(zero_more(ref("stmt")))));
    d.root("program");
    return d.freeze();
  }();
  return g.rule("program");
}

}  // namespace

TEST_CASE("tab expansion examples") {
  CHECK(compute_indent_entries("\tx").front().count == 4);
  CHECK(compute_indent_entries("  \ty").front().count == 4);
  CHECK(compute_indent_entries("    \ty").front().count == 8);
  CHECK(compute_indent_entries("").front() == IndentEntry{0, 0});
  const auto lines = compute_indent_entries("a\n  b\n\n\t c");
  REQUIRE(lines.size() == 4);
  CHECK(lines[1] == IndentEntry{2, 4});
  CHECK(lines[2] == IndentEntry{0, 6});
  CHECK(lines[3] == IndentEntry{5, 9});
}

TEST_CASE("carriage return is not indentation") {
  CHECK(compute_indent_entries("\r  x").front().count == 0);
  CHECK(compute_indent_entries("a\r\n  b")[1].count == 2);
}

TEST_CASE("tab expansion matches the expanding oracle") {
  const auto report = rwd::testing::check_tab_expansion(5);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.ok());
}

TEST_CASE("indent pushes a deeper line") {
  auto ctx = indented("    x");
  ctx->set_pos(4);
  CHECK(indent_parser()->parse(*ctx));
  CHECK(ctx->state<IndentStack>().elements() == std::vector<std::size_t>{4});
  const ParseResult again = indent_parser()->parse(*ctx);
  CHECK_FALSE(again.ok());
  CHECK(again.failure().render() == "Expecting indentation > 4 positions");
  const ParseResult out = dedent_parser()->parse(*ctx);
  CHECK_FALSE(out.ok());
  CHECK(out.failure().render() == "Expecting indentation < 4 positions");
}

TEST_CASE("dedent pops on a shallower line and at end of input") {
  auto ctx = indented("a\nb");
  ctx->state<IndentStack>().push(4);
  ctx->set_pos(2);
  CHECK(dedent_parser()->parse(*ctx));
  CHECK(ctx->state<IndentStack>().empty());

  auto eof = indented("    x");
  eof->state<IndentStack>().push(4);
  eof->set_pos(4);
  CHECK_FALSE(dedent_parser()->parse(*eof));
  eof->set_pos(5);
  CHECK(dedent_parser()->parse(*eof));
  CHECK(eof->state<IndentStack>().empty());
}

TEST_CASE("newline holds at the end of indentation or of input") {
  auto ctx = indented("ab\n  cd");
  CHECK(newline_parser()->parse(*ctx));
  ctx->set_pos(1);
  CHECK_FALSE(newline_parser()->parse(*ctx));
  ctx->set_pos(5);
  CHECK(newline_parser()->parse(*ctx));
  ctx->set_pos(6);
  CHECK_FALSE(newline_parser()->parse(*ctx));
  ctx->set_pos(7);
  CHECK(newline_parser()->parse(*ctx));
  CHECK(ctx->pos() == 7);
}

TEST_CASE("blocks collect their statements") {
  auto ctx = make_ctx<IndentMap, IndentStack>("a:\n    b\n    c\nd\n");
  REQUIRE(statement_grammar_root()->parse(*ctx));
  CHECK(ctx->at_end());
  CHECK(ctx->state<IndentStack>().empty());
  const auto program = rwd::testing::ast_of(*ctx);
  REQUIRE(program.size() == 1);
  const auto& stmts = program[0].as_list();
  REQUIRE(stmts.size() == 2);
  const AstNode& a = stmts[0].as_node();
  CHECK(a.children[0].as_string() == "a");
  REQUIRE(a.children[1].is_list());
  CHECK(a.children[1].as_list().size() == 2);
  CHECK(stmts[1].as_node().children[1].is_none());
}

TEST_CASE("nested blocks closed by end of input") {
  auto ctx = make_ctx<IndentMap, IndentStack>("a:\n  b:\n      c");
  REQUIRE(statement_grammar_root()->parse(*ctx));
  CHECK(ctx->at_end());
  CHECK(ctx->state<IndentStack>().empty());
}

TEST_CASE("an empty block fails") {
  auto ctx = make_ctx<IndentMap, IndentStack>("a:\nb");
  REQUIRE(statement_grammar_root()->parse(*ctx));
  CHECK(ctx->pos() == 0);
  CHECK(ctx->furthest()->render() == "Expecting indentation > 0 positions");
}

TEST_CASE("backing out of a block restores the indentation stack") {
  auto ctx = make_ctx<IndentMap, IndentStack>("a:\n    b\n      x y");
  REQUIRE(build_indent_map()->parse(*ctx));
  const AggregateSnapshot entry = ctx->snapshot();
  auto stmt = seq(aligned_parser(), name(), word(":"), indented_block(seq(aligned_parser(), name(),
                                                                           newline_parser())));
  CHECK_FALSE(stmt->parse(*ctx));
  CHECK(ctx->equivalent(entry, ctx->snapshot()));
}

TEST_CASE("misaligned statements are rejected") {
  auto ctx = make_ctx<IndentMap, IndentStack>("a:\n    b\n  c\n");
  REQUIRE(statement_grammar_root()->parse(*ctx));
  CHECK_FALSE(ctx->at_end());
}
