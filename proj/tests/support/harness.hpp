#pragma once

// Small helpers for running a bare parser over a fresh context.

#include <memory>
#include <string_view>

#include "rewind/ast.hpp"
#include "rewind/context.hpp"
#include "rewind/leftrec.hpp"
#include "rewind/parser.hpp"

namespace rwd::testing {

/// Context over `input` with an AstStack and a LeftRecTable, plus `Cells`.
template <class... Cells>
std::unique_ptr<ParseContext> make_ctx(std::string_view input) {
  auto ctx = std::make_unique<ParseContext>(input);
  ctx->add_cell<AstStack>();
  ctx->add_cell<LeftRecTable>();
  (ctx->add_cell<Cells>(), ...);
  return ctx;
}

inline std::vector<AstValue> ast_of(const ParseContext& ctx) {
  std::vector<AstValue> v = ctx.state<AstStack>().elements();
  return {v.rbegin(), v.rend()};
}

}  // namespace rwd::testing
