#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <utility>

#include "rewind/parser.hpp"
#include "rewind/states.hpp"

namespace rwd {

struct LeftRecKey {
  const Parser* parser = nullptr;
  std::size_t position = 0;
  friend bool operator==(const LeftRecKey&, const LeftRecKey&) = default;
};

struct LeftRecKeyHash {
  std::size_t operator()(const LeftRecKey& k) const {
    return std::hash<const void*>{}(k.parser) * 31u + std::hash<std::size_t>{}(k.position);
  }
};

struct LeftRecEntry {
  enum class Phase { blocked, seeded };
  Phase phase = Phase::blocked;
  std::shared_ptr<const AggregateDelta> seed;

  friend bool operator==(const LeftRecEntry&, const LeftRecEntry&) = default;
};

/// Which left-recursive parsers are active at which positions, and the best
/// seed found so far for each.
///
/// Entries live exactly as long as the owning invocation, so the table's
/// content at any point is determined by the active invocations. Snapshots
/// and restores work as for any MapState. Diffs are empty and merges do
/// nothing: a seed describes the effect of a sub-parse, and a sub-parse leaves
/// this table as it found it. The diff precondition is that the table
/// content matches the snapshot.
class LeftRecTable : public MapState<LeftRecKey, LeftRecEntry, LeftRecKeyHash> {
 public:
  Map diff(const Map& snap) const override;
  void merge(const Map& delta) override;
  std::string name() const override { return "LeftRecTable"; }
};

/// Wraps a left-recursive rule. A re-entry at the same input position first
/// fails (blocked), then, once a seed exists, replays that seed instead of
/// recursing. The seed is grown until a re-run stops reaching further.
ParserPtr leftrec(ParserPtr wrapped);

}  // namespace rwd
