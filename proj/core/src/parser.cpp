#include "rewind/parser.hpp"

#include <cctype>

#include "rewind/combinators.hpp"

namespace rwd {

namespace {

class CustomParser final : public Parser {
 public:
  CustomParser(std::string kind, std::function<ParseResult(ParseContext&)> fn,
               std::vector<ParserPtr> children)
      : kind_(std::move(kind)), fn_(std::move(fn)), children_(std::move(children)) {}

  ParseResult parse(ParseContext& ctx) const override { return fn_(ctx); }
  std::string kind() const override { return kind_; }
  std::vector<const Parser*> children() const override {
    std::vector<const Parser*> out;
    for (const auto& c : children_) out.push_back(c.get());
    return out;
  }

 private:
  std::string kind_;
  std::function<ParseResult(ParseContext&)> fn_;
  std::vector<ParserPtr> children_;
};

}  // namespace

ParserPtr custom(std::string kind, std::function<ParseResult(ParseContext&)> fn,
                 std::vector<ParserPtr> children) {
  return std::make_shared<CustomParser>(std::move(kind), std::move(fn), std::move(children));
}

ParserPtr default_whitespace() {
  return zero_more(
      char_pred([](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; },
                "whitespace"));
}

}  // namespace rwd
