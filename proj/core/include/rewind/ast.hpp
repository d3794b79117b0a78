#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rewind/states.hpp"

namespace rwd {

struct AstNode;

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

/// A value on the AST stack: nothing (an absent option), a string, a node or
/// a list of values. Copies share structure.
class AstValue {
 public:
  using List = std::vector<AstValue>;

  AstValue() = default;

  static AstValue none() { return AstValue(); }
  static AstValue text(std::string s);
  static AstValue node(AstNode n);
  static AstValue list(List items);

  bool is_none() const { return std::holds_alternative<std::monostate>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_node() const { return std::holds_alternative<std::shared_ptr<const AstNode>>(v_); }
  bool is_list() const { return std::holds_alternative<std::shared_ptr<const List>>(v_); }

  const std::string& as_string() const;
  const AstNode& as_node() const;
  const List& as_list() const;

  friend bool operator==(const AstValue& a, const AstValue& b);

 private:
  std::variant<std::monostate, std::string, std::shared_ptr<const AstNode>,
               std::shared_ptr<const List>>
      v_;
};

struct AstNode {
  std::string kind;
  std::vector<AstValue> children;
  Span span;

  friend bool operator==(const AstNode&, const AstNode&) = default;
};

/// Stack used to assemble AST values. Being a MonotonicStack it takes part in
/// backtracking like any cell, and its deltas graft onto later stacks.
class AstStack : public MonotonicStack<AstValue> {
 public:
  std::string name() const override { return "AstStack"; }
};

}  // namespace rwd
