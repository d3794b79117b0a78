#include "leftrec_chains.hpp"

#include <cctype>
#include <random>
#include <vector>

#include "rewind/combinators.hpp"
#include "rewind/leftrec.hpp"

namespace rwd::testing {

namespace {

ParserPtr number() {
  return node("Num", 1,
              lexeme("number",
                     capture(one_more(char_pred(
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; },
                         "digit")))));
}

}  // namespace

std::string shape(const AstValue& v) {
  if (v.is_none()) return "none";
  if (v.is_string()) return '"' + v.as_string() + '"';
  if (v.is_list()) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.as_list().size(); ++i) {
      out += (i ? "," : "") + shape(v.as_list()[i]);
    }
    return out + "]";
  }
  const AstNode& n = v.as_node();
  std::string out = n.kind + "(";
  for (std::size_t i = 0; i < n.children.size(); ++i) out += (i ? "," : "") + shape(n.children[i]);
  return out + ")";
}

const FrozenGrammar& left_recursive_chain_grammar() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    d.rule("NUM", number());
    d.rule("E", leftrec(choice(node("Sub", 2, seq(ref("E"), word("-"), ref("NUM"))),
                               node("Add", 2, seq(ref("E"), word("+"), ref("NUM"))),
                               ref("NUM"))));
    d.root("E");
    return d.freeze();
  }();
  return g;
}

const FrozenGrammar& right_recursive_chain_grammar() {
  static const FrozenGrammar g = [] {
    GrammarDef d;
    auto op = lexeme("operator", capture(choice(str("-"), str("+"))));
    d.rule("R", choice(node("Chain", 3, seq(number(), op, ref("R"))), number()));
    d.root("R");
    return d.freeze();
  }();
  return g;
}

LawReport check_left_associative_chains(unsigned seed, std::size_t count,
                                        std::size_t max_operands) {
  LawReport report;
  std::mt19937 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t operands = 1 + rng() % max_operands;
    std::string input;
    for (std::size_t k = 0; k < operands; ++k) {
      if (k > 0) {
        input += rng() % 2 ? "-" : "+";
        if (rng() % 3 == 0) input += ' ';
      }
      input += std::to_string(rng() % 1000);
      if (rng() % 4 == 0) input += ' ';
    }
    ++report.cases;

    const ParseOutcome right = right_recursive_chain_grammar().parse(input);
    const ParseOutcome tree = left_recursive_chain_grammar().parse(input);
    if (!right.success || !tree.success || tree.ast.size() != 1) {
      report.fail("parse failed on \"" + input + "\"");
      continue;
    }
    // Flatten Chain(num, op, rest) into [num, op, num, op, num, ...], then fold left.
    std::vector<AstValue> items;
    for (AstValue v = right.ast.at(0);;) {
      if (v.as_node().kind != "Chain") {
        items.push_back(v);
        break;
      }
      items.push_back(v.as_node().children[0]);
      items.push_back(v.as_node().children[1]);
      v = v.as_node().children[2];
    }
    std::string expected = shape(items[0]);
    for (std::size_t k = 1; k + 1 < items.size(); k += 2) {
      const std::string kind = items[k].as_string() == "-" ? "Sub" : "Add";
      expected = kind + "(" + expected + "," + shape(items[k + 1]) + ")";
    }
    if (shape(tree.ast[0]) != expected) {
      report.fail("\"" + input + "\": got " + shape(tree.ast[0]) + ", expected " + expected);
    }
  }
  return report;
}

}  // namespace rwd::testing
