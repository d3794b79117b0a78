#pragma once

// Significant-indentation support. The IndentMap is computed once per parse
// and never backtracked; the IndentStack holds the indentation of every
// enclosing block and is restored like any other cell.

#include <cstddef>
#include <string_view>
#include <vector>

#include "rewind/parser.hpp"
#include "rewind/states.hpp"

namespace rwd::examply {

constexpr std::size_t kTabStop = 4;

struct IndentEntry {
  std::size_t count = 0;  // indentation width with tabs expanded
  std::size_t end = 0;    // offset of the first non-indentation character
  friend bool operator==(const IndentEntry&, const IndentEntry&) = default;
};

/// Per-line indentation of `text`, splitting on '\n'. Leading spaces and tabs
/// count as indentation; tabs advance to the next multiple of kTabStop.
std::vector<IndentEntry> compute_indent_entries(std::string_view text);

class IndentMap : public InertState<std::vector<IndentEntry>> {
 public:
  /// Entry for the line containing the context's current position.
  const IndentEntry& get(const ParseContext& ctx) const;
  std::string name() const override { return "IndentMap"; }
};

class IndentStack : public StackState<std::size_t> {
 public:
  /// Indentation of the innermost block; 0 outside any block.
  std::size_t current() const { return peek() ? *peek() : 0; }
  std::string name() const override { return "IndentStack"; }
};

/// Fills the IndentMap from the whole input. Consumes nothing; always succeeds.
ParserPtr build_indent_map();

/// Succeeds when the current line is indented deeper than the current block,
/// pushing the new indentation.
ParserPtr indent_parser();

/// Succeeds when the current line is indented less than the current block, or
/// at end of input, popping the block's indentation.
ParserPtr dedent_parser();

/// Zero-width: succeeds at the end of the current line's indentation or at
/// end of input.
ParserPtr newline_parser();

/// Zero-width: succeeds at the start of a line whose indentation equals the
/// current block's.
ParserPtr aligned_parser();

/// newline, indent, then `item` repeated until a dedent; the values the items
/// push are collected into one list.
ParserPtr indented_block(ParserPtr item);

}  // namespace rwd::examply
