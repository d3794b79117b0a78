#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rewind/ast_dump.hpp"
#include "rewind/grammar.hpp"

namespace rwd::cli {

struct CliConfig {
  std::string grammar;
  std::string input_path;
  AstFormat format = AstFormat::tree;
  bool trace_state = false;
  bool partial = false;
};

enum ExitCode : int { kOk = 0, kParseFailure = 1, kUsage = 2 };

/// Names accepted by --grammar.
std::vector<std::string> grammar_names();

/// Grammar registered under `name`, if any.
const FrozenGrammar* find_grammar(const std::string& name);

/// Parses `input` with the configured grammar, printing the AST to `out` or
/// a `path:line:col: message` diagnostic to `err`.
int run_parse_command(const CliConfig& config, const std::string& input, std::ostream& out,
                      std::ostream& err);

/// Full driver. `args` excludes the program name; `in` backs the `-` path.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace rwd::cli
