#include "rewind/ast.hpp"

#include "rewind/error.hpp"

namespace rwd {

AstValue AstValue::text(std::string s) {
  AstValue v;
  v.v_ = std::move(s);
  return v;
}

AstValue AstValue::node(AstNode n) {
  AstValue v;
  v.v_ = std::make_shared<const AstNode>(std::move(n));
  return v;
}

AstValue AstValue::list(List items) {
  AstValue v;
  v.v_ = std::make_shared<const List>(std::move(items));
  return v;
}

const std::string& AstValue::as_string() const {
  if (!is_string()) throw ContractViolation("AST value is not a string");
  return std::get<std::string>(v_);
}

const AstNode& AstValue::as_node() const {
  if (!is_node()) throw ContractViolation("AST value is not a node");
  return *std::get<std::shared_ptr<const AstNode>>(v_);
}

const AstValue::List& AstValue::as_list() const {
  if (!is_list()) throw ContractViolation("AST value is not a list");
  return *std::get<std::shared_ptr<const List>>(v_);
}

bool operator==(const AstValue& a, const AstValue& b) {
  if (a.v_.index() != b.v_.index()) return false;
  if (a.is_none()) return true;
  if (a.is_string()) return a.as_string() == b.as_string();
  if (a.is_node()) {
    const auto& pa = std::get<std::shared_ptr<const AstNode>>(a.v_);
    const auto& pb = std::get<std::shared_ptr<const AstNode>>(b.v_);
    return pa == pb || *pa == *pb;
  }
  const auto& la = std::get<std::shared_ptr<const AstValue::List>>(a.v_);
  const auto& lb = std::get<std::shared_ptr<const AstValue::List>>(b.v_);
  return la == lb || *la == *lb;
}

}  // namespace rwd
