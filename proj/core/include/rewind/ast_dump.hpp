#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rewind/ast.hpp"

namespace rwd {

enum class AstFormat { tree, json };

/// Renders the values left on the AST stack, bottom first.
///
/// `tree` is an indented listing, one value per line: nodes as
/// `Kind [begin,end)`, strings quoted, lists as `list` followed by their
/// items (`[]` when empty), absent values as `none`.
///
/// `json` is an array of values: nodes become objects with the keys `kind`,
/// `span` and `children` in that order, strings stay strings, lists become
/// arrays and absent values `null`. Output is byte-stable.
std::string dump_ast(const std::vector<AstValue>& values, AstFormat format);

/// Inverse of the json format. Throws std::invalid_argument on malformed input.
std::vector<AstValue> load_ast_json(std::string_view text);

}  // namespace rwd
