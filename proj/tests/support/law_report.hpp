#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rwd::testing {

/// Outcome of an exhaustive or randomized property run.
struct LawReport {
  std::size_t cases = 0;
  std::vector<std::string> failures;  // first few counterexamples, described

  bool ok() const { return failures.empty() && cases > 0; }
  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
    else if (failures.size() == 20) failures.push_back("...");
  }
  void absorb(const LawReport& other) {
    cases += other.cases;
    for (const std::string& f : other.failures) fail(f);
  }
};

}  // namespace rwd::testing
