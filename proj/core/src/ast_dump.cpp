#include "rewind/ast_dump.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rwd {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const AstValue& v) {
  if (v.is_none()) return nullptr;
  if (v.is_string()) return v.as_string();
  if (v.is_list()) {
    Json arr = Json::array();
    for (const AstValue& item : v.as_list()) arr.push_back(to_json(item));
    return arr;
  }
  const AstNode& n = v.as_node();
  Json obj = Json::object();
  obj["kind"] = n.kind;
  obj["span"] = Json::array({n.span.begin, n.span.end});
  Json kids = Json::array();
  for (const AstValue& c : n.children) kids.push_back(to_json(c));
  obj["children"] = std::move(kids);
  return obj;
}

AstValue from_json(const Json& j) {
  if (j.is_null()) return AstValue::none();
  if (j.is_string()) return AstValue::text(j.get<std::string>());
  if (j.is_array()) {
    AstValue::List items;
    for (const Json& e : j) items.push_back(from_json(e));
    return AstValue::list(std::move(items));
  }
  if (j.is_object()) {
    if (!j.contains("kind") || !j.contains("span") || !j.contains("children") ||
        !j["kind"].is_string() || !j["span"].is_array() || j["span"].size() != 2 ||
        !j["children"].is_array()) {
      throw std::invalid_argument("AST node object needs kind, span[2] and children");
    }
    AstNode n;
    n.kind = j["kind"].get<std::string>();
    n.span = Span{j["span"][0].get<std::size_t>(), j["span"][1].get<std::size_t>()};
    for (const Json& c : j["children"]) n.children.push_back(from_json(c));
    return AstValue::node(std::move(n));
  }
  throw std::invalid_argument("unexpected JSON value in AST dump");
}

void tree_line(std::ostringstream& os, const AstValue& v, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  if (v.is_none()) {
    os << indent << "none\n";
  } else if (v.is_string()) {
    os << indent << Json(v.as_string()).dump() << '\n';
  } else if (v.is_list()) {
    const auto& items = v.as_list();
    if (items.empty()) {
      os << indent << "[]\n";
      return;
    }
    os << indent << "list\n";
    for (const AstValue& item : items) tree_line(os, item, depth + 1);
  } else {
    const AstNode& n = v.as_node();
    os << indent << n.kind << " [" << n.span.begin << ',' << n.span.end << ")\n";
    for (const AstValue& c : n.children) tree_line(os, c, depth + 1);
  }
}

}  // namespace

std::string dump_ast(const std::vector<AstValue>& values, AstFormat format) {
  if (format == AstFormat::json) {
    Json arr = Json::array();
    for (const AstValue& v : values) arr.push_back(to_json(v));
    return arr.dump(2) + '\n';
  }
  std::ostringstream os;
  for (const AstValue& v : values) tree_line(os, v, 0);
  return os.str();
}

std::vector<AstValue> load_ast_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("AST dump must be a JSON array");
  std::vector<AstValue> out;
  for (const Json& e : j) out.push_back(from_json(e));
  return out;
}

}  // namespace rwd
