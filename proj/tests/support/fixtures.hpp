#pragma once

// Fixture corpus: fixtures/<grammar>/<name>.<ext> inputs, each paired with
// <name>.json (expected AST, json format) or <name>.err (expected
// `line:col: message` diagnostic).

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "law_report.hpp"

namespace rwd::testing {

struct Fixture {
  std::string grammar;
  std::filesystem::path input;
  std::filesystem::path expected;  // .json or .err
  bool accepts = false;
};

std::filesystem::path fixtures_root();

/// Fixtures under fixtures_root()/<grammar>, sorted by name.
std::vector<Fixture> list_fixtures(const std::string& grammar);

std::string read_file(const std::filesystem::path& p);

/// Runs the CLI on the fixture; nullopt when output and exit code match.
std::optional<std::string> check_fixture(const Fixture& f);

LawReport check_fixture_suite(const std::string& grammar);

}  // namespace rwd::testing
