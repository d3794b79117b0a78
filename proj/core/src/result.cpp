#include "rewind/result.hpp"

namespace rwd {

std::string Diagnostic::render() const {
  struct Visitor {
    std::string operator()(std::string_view s) const { return std::string(s); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::function<std::string()>& f) const {
      return f ? f() : std::string();
    }
  };
  return std::visit(Visitor{}, source_);
}

}  // namespace rwd
