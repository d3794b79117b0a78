#pragma once

#include <any>
#include <string>
#include <typeinfo>

#include "rewind/error.hpp"

namespace rwd {

using CellSnapshot = std::any;
using CellDelta = std::any;

/// One named mutable store taking part in a parse. The four operations are the
/// per-cell versions of the snapshot/restore/diff/merge laws:
///
///   cell_restore(cell_snapshot())            is observably a no-op
///   s = cell_snapshot(); ...; d = cell_diff(s);
///   cell_restore(s); cell_merge(d)           reproduces the content before
///                                            the restore
///
/// The second law only has to hold where the cell's documented diff
/// precondition does.
class StateCell {
 public:
  virtual ~StateCell() = default;

  virtual CellSnapshot cell_snapshot() const = 0;
  virtual void cell_restore(const CellSnapshot& snap) = 0;
  virtual CellDelta cell_diff(const CellSnapshot& snap) const = 0;
  virtual void cell_merge(const CellDelta& delta) = 0;

  /// True when two snapshots of this cell describe the same observable content.
  virtual bool same_content(const CellSnapshot& a, const CellSnapshot& b) const = 0;

  /// Short human-readable description of the current content, for tracing.
  virtual std::string summary() const = 0;

  /// Display name, used in diagnostics and traces.
  virtual std::string name() const;
};

std::string demangle(const char* mangled);

/// Adapts a cell with concrete snapshot and delta types to the type-erased
/// StateCell interface.
template <class Snap, class Delta>
class TypedState : public StateCell {
 public:
  using snapshot_type = Snap;
  using delta_type = Delta;

  virtual Snap snapshot() const = 0;
  virtual void restore(const Snap& snap) = 0;
  virtual Delta diff(const Snap& snap) const = 0;
  virtual void merge(const Delta& delta) = 0;
  virtual bool snapshots_equal(const Snap& a, const Snap& b) const = 0;

  CellSnapshot cell_snapshot() const final { return snapshot(); }
  void cell_restore(const CellSnapshot& snap) final { restore(unwrap<Snap>(snap, "restore")); }
  CellDelta cell_diff(const CellSnapshot& snap) const final {
    return diff(unwrap<Snap>(snap, "diff"));
  }
  void cell_merge(const CellDelta& delta) final { merge(unwrap<Delta>(delta, "merge")); }
  bool same_content(const CellSnapshot& a, const CellSnapshot& b) const final {
    return snapshots_equal(unwrap<Snap>(a, "compare"), unwrap<Snap>(b, "compare"));
  }

 private:
  template <class T>
  const T& unwrap(const std::any& value, const char* op) const {
    const T* p = std::any_cast<T>(&value);
    if (p == nullptr) {
      throw ContractViolation(std::string(op) + ": value of type " +
                              demangle(value.type().name()) + " does not belong to cell " +
                              name());
    }
    return *p;
  }
};

}  // namespace rwd
