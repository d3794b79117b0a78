#include "rewind_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "rewind/examply/demos.hpp"
#include "rewind/examply/examply.hpp"

namespace rwd::cli {

namespace {

using GrammarGetter = const FrozenGrammar& (*)();

const std::map<std::string, GrammarGetter>& registry() {
  static const std::map<std::string, GrammarGetter> grammars = {
      {"anbncn", &examply::demo_anbncn},
      {"examply", &examply::examply_grammar},
      {"expr", &examply::demo_expr},
      {"tags", &examply::demo_matched_tags},
  };
  return grammars;
}

std::optional<std::string> read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) return std::nullopt;
  return buffer.str();
}

}  // namespace

std::vector<std::string> grammar_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

const FrozenGrammar* find_grammar(const std::string& name) {
  auto it = registry().find(name);
  return it == registry().end() ? nullptr : &it->second();
}

int run_parse_command(const CliConfig& config, const std::string& input, std::ostream& out,
                      std::ostream& err) {
  const FrozenGrammar* grammar = find_grammar(config.grammar);
  if (grammar == nullptr) {
    err << "unknown grammar: " << config.grammar << "\n";
    return kUsage;
  }
  ParseOptions options;
  options.full_match = !config.partial;
  if (config.trace_state) options.trace = &err;

  const ParseOutcome outcome = grammar->parse(input, options);
  if (!outcome.success) {
    const std::string shown = config.input_path == "-" ? "<stdin>" : config.input_path;
    const SourceError& e = *outcome.error;
    err << shown << ":" << e.line << ":" << e.column << ": " << e.message << "\n";
    return kParseFailure;
  }
  out << dump_ast(outcome.ast, config.format);
  return kOk;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Parse input files with the bundled grammars", "rewind"};
  app.require_subcommand(1);

  CliConfig config;
  CLI::App* parse = app.add_subcommand("parse", "Parse a file and print its AST");
  parse->add_option("--grammar,-g", config.grammar, "Grammar to parse with")
      ->required()
      ->check(CLI::IsMember(grammar_names()));
  const std::map<std::string, AstFormat> formats{{"tree", AstFormat::tree},
                                                 {"json", AstFormat::json}};
  parse->add_option("--format,-f", config.format, "AST output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description("{tree,json}"))
      ->type_name("FORMAT");
  parse->add_flag("--trace-state", config.trace_state,
                  "Log every snapshot/restore/diff/merge to stderr");
  parse->add_flag("--partial", config.partial, "Accept a parse that stops before end of input");
  parse->add_option("input", config.input_path, "Input file, or - for stdin")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rewind: " << e.what() << "\n";
    return kUsage;
  }

  const std::optional<std::string> input = read_input(config.input_path, in);
  if (!input) {
    err << "rewind: cannot read " << config.input_path << "\n";
    return kUsage;
  }
  return run_parse_command(config, *input, out, err);
}

}  // namespace rwd::cli
