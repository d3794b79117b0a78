#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rewind_cli/cli.hpp"

namespace rwd::testing {

namespace fs = std::filesystem;

fs::path fixtures_root() { return fs::path(REWIND_FIXTURES_DIR); }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Fixture> list_fixtures(const std::string& grammar) {
  std::vector<Fixture> out;
  const fs::path dir = fixtures_root() / grammar;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const fs::path p = entry.path();
    const std::string ext = p.extension().string();
    if (!entry.is_regular_file() || ext == ".json" || ext == ".err") continue;
    Fixture f;
    f.grammar = grammar;
    f.input = p;
    fs::path json = p, err = p;
    json.replace_extension(".json");
    err.replace_extension(".err");
    f.accepts = fs::exists(json);
    f.expected = f.accepts ? json : err;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture& a, const Fixture& b) { return a.input < b.input; });
  return out;
}

std::optional<std::string> check_fixture(const Fixture& f) {
  if (!fs::exists(f.expected)) return "no expected output for " + f.input.string();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run_cli(
      {"parse", "--grammar", f.grammar, "--format", "json", f.input.string()}, in, out, err);
  const std::string want = read_file(f.expected);
  const std::string name = f.input.filename().string();
  if (f.accepts) {
    if (code != cli::kOk) return name + ": expected success, got exit " + std::to_string(code) +
                                 ": " + err.str();
    if (out.str() != want) return name + ": AST differs from " + f.expected.filename().string();
    return std::nullopt;
  }
  if (code != cli::kParseFailure) return name + ": expected a parse failure, got exit " +
                                         std::to_string(code);
  const std::string prefix = f.input.string() + ":";
  std::string got = err.str();
  if (got.rfind(prefix, 0) != 0) return name + ": diagnostic lacks path prefix: " + got;
  got = got.substr(prefix.size());
  if (got != want) return name + ": diagnostic \"" + got + "\" differs from \"" + want + "\"";
  return std::nullopt;
}

LawReport check_fixture_suite(const std::string& grammar) {
  LawReport report;
  for (const Fixture& f : list_fixtures(grammar)) {
    ++report.cases;
    if (auto problem = check_fixture(f)) report.fail(*problem);
  }
  return report;
}

}  // namespace rwd::testing
