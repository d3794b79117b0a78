#include <doctest.h>

#include "leftrec_chains.hpp"
#include "rewind/combinators.hpp"
#include "rewind/error.hpp"
#include "rewind/grammar.hpp"
#include "rewind/leftrec.hpp"

using namespace rwd;
using rwd::testing::shape;

namespace {

class Ops : public StackState<std::string> {};

ParserPtr digit() {
  return char_pred([](char c) { return c >= '0' && c <= '9'; }, "digit");
}

}  // namespace

TEST_CASE("subtraction chains associate to the left") {
  const auto& g = testing::left_recursive_chain_grammar();
  const ParseOutcome r = g.parse("1-2-3");
  REQUIRE(r.success);
  REQUIRE(r.ast.size() == 1);
  CHECK(shape(r.ast[0]) == "Sub(Sub(Num(\"1\"),Num(\"2\")),Num(\"3\"))");
  CHECK(r.ast[0].as_node().span.begin == 0);
  CHECK(r.ast[0].as_node().span.end == 5);

  CHECK(shape(g.parse("42").ast.at(0)) == "Num(\"42\")");
  CHECK(shape(g.parse("1 + 2 - 3").ast.at(0)) == "Sub(Add(Num(\"1\"),Num(\"2\")),Num(\"3\"))");
}

TEST_CASE("incomplete chain reports the missing operand") {
  const ParseOutcome r = testing::left_recursive_chain_grammar().parse("1-");
  REQUIRE_FALSE(r.success);
  CHECK(r.error->position == 2);
  CHECK(r.error->message == "expected number");
}

TEST_CASE("the table is empty after a parse") {
  const ParseOutcome r = testing::left_recursive_chain_grammar().parse("1-2-3-4");
  REQUIRE(r.success);
  CHECK(r.context->state<LeftRecTable>().size() == 0);
}

TEST_CASE("state effects of the winning parse are kept exactly once") {
  GrammarDef d;
  d.require_cell<Ops>();
  auto num = one_more(digit());
  d.rule("E", leftrec(choice(seq(ref("E"), and_do(str("-"), [](ParseContext& ctx) {
                                                ctx.state<Ops>().push("-");
                                              }),
                                 num),
                             num)));
  d.root("E");
  d.whitespace(no_whitespace());
  const FrozenGrammar g = d.freeze();
  const ParseOutcome r = g.parse("1-2-3");
  REQUIRE(r.success);
  CHECK(r.context->state<Ops>().size() == 2);
}

TEST_CASE("indirect left recursion through a second rule") {
  GrammarDef d;
  d.rule("A", leftrec(choice(node("X", 1, seq(ref("B"), word("x"))), node("Y", 0, word("y")))));
  d.rule("B", ref("A"));
  d.root("A");
  const FrozenGrammar g = d.freeze();
  const ParseOutcome r = g.parse("y x x");
  REQUIRE(r.success);
  CHECK(shape(r.ast.at(0)) == "X(X(Y()))");
}

TEST_CASE("left recursion nested inside another left-recursive rule") {
  GrammarDef d;
  auto num = node("N", 1, lexeme("number", capture(one_more(digit()))));
  d.rule("T", leftrec(choice(node("Mul", 2, seq(ref("T"), word("*"), num)), num)));
  d.rule("E", leftrec(choice(node("Sub", 2, seq(ref("E"), word("-"), ref("T"))), ref("T"))));
  d.root("E");
  const ParseOutcome r = d.freeze().parse("1*2-3*4*5-6");
  REQUIRE(r.success);
  CHECK(shape(r.ast.at(0)) ==
        "Sub(Sub(Mul(N(\"1\"),N(\"2\")),Mul(Mul(N(\"3\"),N(\"4\")),N(\"5\"))),N(\"6\"))");
}

TEST_CASE("unannotated left recursion is rejected at freeze") {
  GrammarDef d;
  d.rule("E", choice(seq(ref("E"), word("-"), one_more(digit())), one_more(digit())));
  d.root("E");
  CHECK_THROWS_WITH_AS(d.freeze(), "left-recursive cycle without leftrec: E -> E",
                       ConfigurationError);
}

TEST_CASE("random chains match the fold-left oracle") {
  const auto report = testing::check_left_associative_chains(7, 300, 8);
  for (const auto& f : report.failures) MESSAGE(f);
  CHECK(report.ok());
}
