#include "rewind/examply/indent.hpp"

#include <string>

#include "rewind/combinators.hpp"

namespace rwd::examply {

std::vector<IndentEntry> compute_indent_entries(std::string_view text) {
  std::vector<IndentEntry> entries;
  std::size_t line_start = 0;
  for (;;) {
    std::size_t i = line_start;
    std::size_t column = 0;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) {
      column = text[i] == ' ' ? column + 1 : (column / kTabStop + 1) * kTabStop;
      ++i;
    }
    entries.push_back(IndentEntry{column, i});
    const std::size_t nl = text.find('\n', line_start);
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }
  return entries;
}

const IndentEntry& IndentMap::get(const ParseContext& ctx) const {
  const std::size_t line = ctx.lines().line_of(ctx.pos());
  if (line >= content().size()) {
    throw ContractViolation("IndentMap queried before build_indent_map ran");
  }
  return content()[line];
}

ParserPtr build_indent_map() {
  return custom("build_indent_map", [](ParseContext& ctx) -> ParseResult {
    const std::string_view input = ctx.text().substr(0, ctx.input_size());
    ctx.state<IndentMap>().content() = compute_indent_entries(input);
    return Success{};
  });
}

ParserPtr indent_parser() {
  return custom("indent", [](ParseContext& ctx) -> ParseResult {
    const std::size_t now = ctx.state<IndentMap>().get(ctx).count;
    IndentStack& stack = ctx.state<IndentStack>();
    const std::size_t old = stack.current();
    if (now > old) {
      stack.push(now);
      return Success{};
    }
    return ctx.fail([old] {
      return "Expecting indentation > " + std::to_string(old) + " positions";
    });
  });
}

ParserPtr dedent_parser() {
  return custom("dedent", [](ParseContext& ctx) -> ParseResult {
    const std::size_t now = ctx.state<IndentMap>().get(ctx).count;
    IndentStack& stack = ctx.state<IndentStack>();
    const std::size_t old = stack.current();
    if (now < old || ctx.at_end()) {
      stack.pop();
      return Success{};
    }
    return ctx.fail([old] {
      return "Expecting indentation < " + std::to_string(old) + " positions";
    });
  });
}

ParserPtr newline_parser() {
  return predicate(
      [](ParseContext& ctx) {
        return ctx.state<IndentMap>().get(ctx).end == ctx.pos() || ctx.at_end();
      },
      "expected end of line");
}

ParserPtr aligned_parser() {
  return predicate(
      [](ParseContext& ctx) {
        const IndentEntry& e = ctx.state<IndentMap>().get(ctx);
        return e.end == ctx.pos() && e.count == ctx.state<IndentStack>().current();
      },
      std::function<Diagnostic(ParseContext&)>([](ParseContext& ctx) -> Diagnostic {
        const std::size_t expected = ctx.state<IndentStack>().current();
        return Diagnostic([expected] {
          return "expected a statement at indentation " + std::to_string(expected);
        });
      }));
}

ParserPtr indented_block(ParserPtr item) {
  return collect(seq(newline_parser(), indent_parser(), until(std::move(item), dedent_parser())));
}

}  // namespace rwd::examply
