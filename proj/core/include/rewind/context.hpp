#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <typeindex>
#include <unordered_map>
#include <vector>

#include "rewind/error.hpp"
#include "rewind/result.hpp"
#include "rewind/state_cell.hpp"

namespace rwd {

class Parser;

/// Maps byte offsets to 0-based line indices, splitting on '\n' only.
class LineMap {
 public:
  LineMap() = default;
  explicit LineMap(std::string_view text);

  std::size_t line_of(std::size_t offset) const;
  std::size_t line_start(std::size_t line) const { return starts_[line]; }
  std::size_t line_count() const { return starts_.size(); }

  struct LineCol {
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based, in bytes
  };
  LineCol line_col(std::size_t offset) const;

 private:
  std::vector<std::size_t> starts_{0};
};

/// Whole-parse capture: input position plus one snapshot per registered cell,
/// in registry order.
struct AggregateSnapshot {
  std::size_t position = 0;
  std::vector<CellSnapshot> cells;
  std::uint64_t owner = 0;
};

/// Changes since an AggregateSnapshot: the position reached plus one delta per
/// registered cell, in registry order.
struct AggregateDelta {
  std::size_t end_position = 0;
  std::vector<CellDelta> cells;
  std::uint64_t owner = 0;
};

/// Per-parse mutable store. Holds the input (with a NUL sentinel appended),
/// the current position, the registered state cells and the furthest failure
/// seen so far.
///
/// Cells must all be registered before the first snapshot; the registry is
/// sealed from then on. The furthest-failure record is not part of the
/// aggregate state and survives backtracking.
class ParseContext {
 public:
  static constexpr char kSentinel = '\0';

  explicit ParseContext(std::string_view input);
  ParseContext(const ParseContext&) = delete;
  ParseContext& operator=(const ParseContext&) = delete;

  // -- input -----------------------------------------------------------------
  std::string_view text() const { return text_; }
  std::size_t input_size() const { return text_.size() - 1; }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p);
  void advance(std::size_t n) { set_pos(pos_ + n); }
  bool at_end() const { return pos_ == input_size(); }
  char current() const { return text_[pos_]; }
  std::string_view rest() const { return std::string_view(text_).substr(pos_, input_size() - pos_); }
  const LineMap& lines() const { return lines_; }

  // -- cells -----------------------------------------------------------------
  StateCell& add_cell(std::type_index key, std::unique_ptr<StateCell> cell);

  template <class Cell, class... Args>
  Cell& add_cell(Args&&... args) {
    return static_cast<Cell&>(
        add_cell(typeid(Cell), std::make_unique<Cell>(std::forward<Args>(args)...)));
  }

  StateCell& state(std::type_index key);
  const StateCell& state(std::type_index key) const;

  template <class Cell>
  Cell& state() {
    return static_cast<Cell&>(state(typeid(Cell)));
  }
  template <class Cell>
  const Cell& state() const {
    return static_cast<const Cell&>(state(typeid(Cell)));
  }

  template <class Cell>
  bool has_state() const {
    return index_.count(typeid(Cell)) != 0;
  }

  std::size_t cell_count() const { return cells_.size(); }
  const StateCell& cell_at(std::size_t i) const { return *cells_[i]; }

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  // -- aggregate state operations ---------------------------------------------
  AggregateSnapshot snapshot();
  void restore(const AggregateSnapshot& snap);
  AggregateDelta diff(const AggregateSnapshot& snap);
  void merge(const AggregateDelta& delta);

  /// Observable equality of two snapshots taken from this context.
  bool equivalent(const AggregateSnapshot& a, const AggregateSnapshot& b) const;

  // -- failures --------------------------------------------------------------
  /// Builds a Failure and, unless failures are being muted, makes it the
  /// furthest failure when it lies at or beyond the current record.
  ParseResult fail(std::size_t pos, Diagnostic msg);
  ParseResult fail(Diagnostic msg) { return fail(pos_, std::move(msg)); }
  const std::optional<Failure>& furthest() const { return furthest_; }

  /// While alive, failures are not recorded as furthest. Token-level parsers
  /// use this to report one failure at the token start instead of whatever
  /// character loop ran last.
  class MuteFailures {
   public:
    explicit MuteFailures(ParseContext& ctx) : ctx_(ctx) { ++ctx_.muted_; }
    ~MuteFailures() { release(); }
    void release() {
      if (active_) --ctx_.muted_;
      active_ = false;
    }
    MuteFailures(const MuteFailures&) = delete;
    MuteFailures& operator=(const MuteFailures&) = delete;

   private:
    ParseContext& ctx_;
    bool active_ = true;
  };

  // -- grammar hooks ---------------------------------------------------------
  void set_whitespace(const Parser* ws) { whitespace_ = ws; }
  /// The whitespace parser of the running grammar; a default one when unset.
  const Parser& whitespace() const;

  void set_trace(std::ostream* out) { trace_ = out; }

 private:
  void check_owner(std::uint64_t owner, std::size_t cells, const char* op) const;
  void trace(const char* op, std::size_t position) const;

  std::string text_;
  std::size_t pos_ = 0;
  LineMap lines_;
  std::vector<std::unique_ptr<StateCell>> cells_;
  std::unordered_map<std::type_index, std::size_t> index_;
  bool sealed_ = false;
  std::optional<Failure> furthest_;
  int muted_ = 0;
  const Parser* whitespace_ = nullptr;
  std::ostream* trace_ = nullptr;
  std::uint64_t id_;
};

}  // namespace rwd
