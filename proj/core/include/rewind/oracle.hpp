#pragma once

// Executable model of parse state as a log of changes. Every operation here is
// a pure function over immutable values; the runtime cells in states.hpp are
// checked against these definitions in the test suite.

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rwd::oracle {

struct Change {
  std::string tag;
  std::variant<std::int64_t, std::string> payload;

  friend bool operator==(const Change&, const Change&) = default;
};

std::ostream& operator<<(std::ostream& os, const Change& c);

// A state is the sequence of every change applied to it; snapshots and deltas
// share the representation.
using ChangeLog = std::vector<Change>;
using LogState = ChangeLog;
using LogSnapshot = ChangeLog;
using LogDelta = ChangeLog;

using Transform = std::function<LogState(const LogState&)>;

enum class Outcome { success, failure };

/// A parser in the model: given the state it is called in, it yields the
/// trace of transformations it performs and whether it succeeds.
struct ModelParser {
  std::function<std::vector<Transform>(const LogState&)> trace;
  std::function<Outcome(const LogState&)> result;
};

bool is_prefix(const ChangeLog& prefix, const ChangeLog& of);

LogSnapshot snapshot(const LogState& st);

/// Throws ContractViolation unless `sn` is a prefix of `st`.
LogDelta diff(const LogSnapshot& sn, const LogState& st);

LogState apply_change(const Change& c, const LogState& st);
LogState restore(const LogSnapshot& sn, const LogState& st);
LogState merge(const LogDelta& d, const LogState& st);

// Curried forms, used to build parser traces.
Transform apply_change(Change c);
Transform restore(LogSnapshot sn);
Transform merge(LogDelta d);

/// Replaces the first two transformations of `s` by their composition
/// (first applied first). Requires s.size() >= 2.
std::vector<Transform> compose_two(std::vector<Transform> s);

/// Composition of the first `n` transformations of `s`, identity for n == 0.
Transform reduce_n(std::size_t n, std::vector<Transform> s);

/// State after invoking `p` in `st`: the composed trace on success, `st`
/// itself on failure.
LogState call(const ModelParser& p, const LogState& st);

}  // namespace rwd::oracle
