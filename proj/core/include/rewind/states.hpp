#pragma once

// Reusable StateCell strategies. Each one picks its own representation for
// snapshots and deltas; see the class comments for the diff preconditions.

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rewind/error.hpp"
#include "rewind/hamt.hpp"
#include "rewind/state_cell.hpp"

namespace rwd {

/// Small record copied whole on every snapshot. Deltas are whole-record
/// captures too, so merge overwrites every field.
template <class Record>
class CopyState : public TypedState<Record, Record> {
 public:
  CopyState() = default;
  explicit CopyState(Record initial) : value_(std::move(initial)) {}

  const Record& get() const { return value_; }
  Record& mutate() { return value_; }
  void set(Record r) { value_ = std::move(r); }

  Record snapshot() const override { return value_; }
  void restore(const Record& snap) override { value_ = snap; }
  Record diff(const Record& /*snap*/) const override { return value_; }
  void merge(const Record& delta) override { value_ = delta; }
  bool snapshots_equal(const Record& a, const Record& b) const override { return a == b; }

  std::string summary() const override { return this->name(); }

 private:
  Record value_{};
};

/// Immutable singly linked list node shared between stack versions.
template <class T>
struct StackNode {
  T value;
  std::shared_ptr<const StackNode> next;
  std::size_t size;
};

template <class T>
using StackLink = std::shared_ptr<const StackNode<T>>;

/// Common persistent-stack behaviour for StackState and MonotonicStack. A
/// snapshot is the top node; pushes and pops never touch shared nodes.
template <class T, class Delta>
class StackCell : public TypedState<StackLink<T>, Delta> {
 public:
  using Link = StackLink<T>;

  void push(T v) {
    const std::size_t n = size() + 1;
    top_ = std::make_shared<const StackNode<T>>(StackNode<T>{std::move(v), top_, n});
  }

  std::optional<T> pop() {
    if (!top_) return std::nullopt;
    T v = top_->value;
    top_ = top_->next;
    return v;
  }

  const T* peek() const { return top_ ? &top_->value : nullptr; }

  /// Element `depth` positions below the top (0 is the top).
  const T* at(std::size_t depth) const {
    const StackNode<T>* n = top_.get();
    for (; n != nullptr && depth > 0; --depth) n = n->next.get();
    return n ? &n->value : nullptr;
  }

  std::size_t size() const { return top_ ? top_->size : 0; }
  bool empty() const { return !top_; }

  /// Pops until at most `n` elements remain.
  void truncate(std::size_t n) {
    while (top_ && top_->size > n) top_ = top_->next;
  }

  /// Elements from top to bottom.
  std::vector<T> elements() const {
    std::vector<T> out;
    out.reserve(size());
    for (const StackNode<T>* n = top_.get(); n != nullptr; n = n->next.get()) out.push_back(n->value);
    return out;
  }

  template <class F>
  void for_each_top_down(F&& f) const {
    for (const StackNode<T>* n = top_.get(); n != nullptr; n = n->next.get()) f(n->value);
  }

  Link snapshot() const override { return top_; }
  void restore(const Link& snap) override { top_ = snap; }

  bool snapshots_equal(const Link& a, const Link& b) const override {
    return same_elements(a.get(), b.get());
  }

  std::string summary() const override {
    std::ostringstream os;
    os << this->name() << '[' << size() << ']';
    return os.str();
  }

 protected:
  // Shared nodes short-circuit; otherwise element by element.
  static bool same_elements(const StackNode<T>* x, const StackNode<T>* y) {
    while (x != y) {
      if (x == nullptr || y == nullptr || x->size != y->size || !(x->value == y->value)) {
        return false;
      }
      x = x->next.get();
      y = y->next.get();
    }
    return true;
  }

  Link top_;
};

/// Stack treated as a unit: the delta is the whole current list and merge
/// replaces the stack with it.
template <class T>
class StackState : public StackCell<T, StackLink<T>> {
 public:
  using Link = StackLink<T>;

  Link diff(const Link& /*snap*/) const override { return this->top_; }
  void merge(const Link& delta) override { this->top_ = delta; }
};

/// Elements pushed since a snapshot, bottom-to-top. Merging pushes them in
/// this order, re-creating their original stacking.
template <class T>
using StackGraft = std::vector<T>;

/// Stack whose diff requires the snapshot to still be a suffix of the current
/// stack (by value; usually the snapshot's top node is simply reachable).
/// The delta is the run of elements above it, which merge grafts onto
/// whatever stack is current.
template <class T>
class MonotonicStack : public StackCell<T, StackGraft<T>> {
 public:
  using Link = StackLink<T>;

  StackGraft<T> diff(const Link& snap) const override {
    const std::size_t base = snap ? snap->size : 0;
    StackGraft<T> above;
    const StackNode<T>* n = this->top_.get();
    while (n != nullptr && n->size > base) {
      above.push_back(n->value);
      n = n->next.get();
    }
    if (!this->same_elements(n, snap.get())) {
      throw ContractViolation("diff on " + this->name() +
                              ": snapshot is not a suffix of the current stack");
    }
    return StackGraft<T>(above.rbegin(), above.rend());
  }

  void merge(const StackGraft<T>& delta) override {
    for (const T& v : delta) this->push(v);
  }
};

/// Map over a persistent HAMT, treated as a unit: diff captures the current
/// version and merge installs it.
template <class K, class V, class Hash = std::hash<K>>
class MapState : public TypedState<PersistentMap<K, V, Hash>, PersistentMap<K, V, Hash>> {
 public:
  using Map = PersistentMap<K, V, Hash>;

  const V* get(const K& k) const { return map_.find(k); }
  void put(K k, V v) { map_ = map_.set(std::move(k), std::move(v)); }
  void remove(const K& k) { map_ = map_.erase(k); }
  std::size_t size() const { return map_.size(); }
  const Map& content() const { return map_; }

  Map snapshot() const override { return map_; }
  void restore(const Map& snap) override { map_ = snap; }
  Map diff(const Map& /*snap*/) const override { return map_; }
  void merge(const Map& delta) override { map_ = delta; }
  bool snapshots_equal(const Map& a, const Map& b) const override { return a == b; }

  std::string summary() const override {
    std::ostringstream os;
    os << this->name() << '{' << map_.size() << '}';
    return os.str();
  }

 protected:
  Map map_;
};

/// State that backtracking never touches: every operation is a no-op and the
/// content survives restores.
template <class T>
class InertState : public TypedState<std::monostate, std::monostate> {
 public:
  T& content() { return value_; }
  const T& content() const { return value_; }

  std::monostate snapshot() const override { return {}; }
  void restore(const std::monostate&) override {}
  std::monostate diff(const std::monostate&) const override { return {}; }
  void merge(const std::monostate&) override {}
  bool snapshots_equal(const std::monostate&, const std::monostate&) const override {
    return true;
  }

  std::string summary() const override { return this->name(); }

 private:
  T value_{};
};

}  // namespace rwd
