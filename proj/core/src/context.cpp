#include "rewind/context.hpp"

#include <algorithm>
#include <atomic>
#include <cxxabi.h>
#include <cstdlib>
#include <sstream>

#include "rewind/parser.hpp"

namespace rwd {

namespace {
std::atomic<std::uint64_t> next_context_id{1};
}  // namespace

std::string demangle(const char* mangled) {
  int status = 0;
  char* out = abi::__cxa_demangle(mangled, nullptr, nullptr, &status);
  if (status != 0 || out == nullptr) return mangled;
  std::string result(out);
  std::free(out);
  return result;
}

std::string StateCell::name() const { return demangle(typeid(*this).name()); }

LineMap::LineMap(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') starts_.push_back(i + 1);
  }
}

std::size_t LineMap::line_of(std::size_t offset) const {
  auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
  return static_cast<std::size_t>(it - starts_.begin()) - 1;
}

LineMap::LineCol LineMap::line_col(std::size_t offset) const {
  const std::size_t line = line_of(offset);
  return {line + 1, offset - starts_[line] + 1};
}

ParseContext::ParseContext(std::string_view input)
    : text_(std::string(input) + kSentinel), lines_(input), id_(next_context_id++) {}

void ParseContext::set_pos(std::size_t p) {
  if (p > input_size()) {
    throw ContractViolation("position " + std::to_string(p) + " is past the end of input");
  }
  pos_ = p;
}

StateCell& ParseContext::add_cell(std::type_index key, std::unique_ptr<StateCell> cell) {
  if (sealed_) {
    throw ContractViolation("cannot register cell " + cell->name() + " after the parse started");
  }
  if (index_.count(key) != 0) {
    throw ConfigurationError("state cell " + cell->name() + " is registered twice");
  }
  index_.emplace(key, cells_.size());
  cells_.push_back(std::move(cell));
  return *cells_.back();
}

StateCell& ParseContext::state(std::type_index key) {
  return const_cast<StateCell&>(static_cast<const ParseContext&>(*this).state(key));
}

const StateCell& ParseContext::state(std::type_index key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    throw ConfigurationError("state cell " + demangle(key.name()) + " is not registered");
  }
  return *cells_[it->second];
}

void ParseContext::check_owner(std::uint64_t owner, std::size_t cells, const char* op) const {
  if (owner != id_ || cells != cells_.size()) {
    throw ContractViolation(std::string(op) + ": value was not produced by this parse context");
  }
}

void ParseContext::trace(const char* op, std::size_t position) const {
  if (trace_ == nullptr) return;
  std::ostringstream line;
  line << "[state] " << op << " pos=" << position;
  for (const auto& cell : cells_) line << ' ' << cell->summary();
  line << '\n';
  *trace_ << line.str();
}

AggregateSnapshot ParseContext::snapshot() {
  sealed_ = true;
  AggregateSnapshot snap;
  snap.position = pos_;
  snap.owner = id_;
  snap.cells.reserve(cells_.size());
  for (const auto& cell : cells_) snap.cells.push_back(cell->cell_snapshot());
  trace("snapshot", pos_);
  return snap;
}

void ParseContext::restore(const AggregateSnapshot& snap) {
  check_owner(snap.owner, snap.cells.size(), "restore");
  pos_ = snap.position;
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i]->cell_restore(snap.cells[i]);
  trace("restore", pos_);
}

AggregateDelta ParseContext::diff(const AggregateSnapshot& snap) {
  check_owner(snap.owner, snap.cells.size(), "diff");
  AggregateDelta delta;
  delta.end_position = pos_;
  delta.owner = id_;
  delta.cells.reserve(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    delta.cells.push_back(cells_[i]->cell_diff(snap.cells[i]));
  }
  trace("diff", pos_);
  return delta;
}

void ParseContext::merge(const AggregateDelta& delta) {
  check_owner(delta.owner, delta.cells.size(), "merge");
  pos_ = delta.end_position;
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i]->cell_merge(delta.cells[i]);
  trace("merge", pos_);
}

bool ParseContext::equivalent(const AggregateSnapshot& a, const AggregateSnapshot& b) const {
  check_owner(a.owner, a.cells.size(), "equivalent");
  check_owner(b.owner, b.cells.size(), "equivalent");
  if (a.position != b.position) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!cells_[i]->same_content(a.cells[i], b.cells[i])) return false;
  }
  return true;
}

ParseResult ParseContext::fail(std::size_t pos, Diagnostic msg) {
  if (muted_ == 0 && (!furthest_ || pos >= furthest_->position)) {
    furthest_ = Failure{pos, msg};
  }
  return ParseResult::failure(pos, std::move(msg));
}

const Parser& ParseContext::whitespace() const {
  if (whitespace_ != nullptr) return *whitespace_;
  static const ParserPtr fallback = default_whitespace();
  return *fallback;
}

}  // namespace rwd
