#include "rewind/examply/types.hpp"

#include <algorithm>

#include "rewind/ast.hpp"
#include "rewind/combinators.hpp"

namespace rwd::examply {

namespace {

const std::string& string_at(const ParseContext& ctx, std::size_t depth, const char* who) {
  const AstValue* v = ctx.state<AstStack>().at(depth);
  if (v == nullptr || !v->is_string()) {
    throw ContractViolation(std::string(who) + ": expected a name on the AST stack at depth " +
                            std::to_string(depth));
  }
  return v->as_string();
}

const TypeRecord* find_type(const ParseContext& ctx, std::string_view name) {
  const TypeRecord* found = nullptr;
  ctx.state<TypeStack>().for_each_top_down([&](const TypeRecord& r) {
    if (found == nullptr && r.name == name) found = &r;
  });
  return found;
}

}  // namespace

bool is_type(const ParseContext& ctx, std::string_view name) {
  return find_type(ctx, name) != nullptr;
}

std::vector<TypeRecord> priv_of(const ParseContext& ctx, std::string_view name) {
  const TypeRecord* r = find_type(ctx, name);
  return r != nullptr ? r->priv : std::vector<TypeRecord>{};
}

void inherit(ParseContext& ctx, std::string_view name) {
  TypeStack& types = ctx.state<TypeStack>();
  for (TypeRecord& r : priv_of(ctx, name)) types.push(std::move(r));
}

ParserPtr new_type(ParserPtr child, bool alias) {
  return and_do(std::move(child), [alias](ParseContext& ctx) {
    if (alias) {
      const std::string& target = string_at(ctx, 0, "new_type");
      const std::string& name = string_at(ctx, 1, "new_type");
      ctx.state<TypeStack>().push(TypeRecord{name, priv_of(ctx, target)});
    } else {
      ctx.state<TypeStack>().push(TypeRecord{string_at(ctx, 0, "new_type"), {}});
    }
  });
}

ParserPtr scoped(ParserPtr body) {
  return custom(
      "scoped",
      [body](ParseContext& ctx) -> ParseResult {
        const std::size_t depth = ctx.state<TypeStack>().size();
        ParseResult r = body->parse(ctx);
        if (r) ctx.state<TypeStack>().truncate(depth);
        return r;
      },
      {body});
}

ParserPtr class_def(ParserPtr body) {
  return custom(
      "class_def",
      [body](ParseContext& ctx) -> ParseResult {
        const AstValue* super = ctx.state<AstStack>().at(0);
        if (super == nullptr || !(super->is_string() || super->is_none())) {
          throw ContractViolation("class_def: expected a superclass name or none on the AST stack");
        }
        const std::string name = string_at(ctx, 1, "class_def");
        EnclosingClasses& enclosing = ctx.state<EnclosingClasses>();

        TypeStack& types = ctx.state<TypeStack>();
        const auto types_entry = types.snapshot();
        const auto enclosing_entry = enclosing.snapshot();
        if (super->is_string()) inherit(ctx, super->as_string());
        enclosing.push(name);

        ParseResult r = body->parse(ctx);
        if (!r) {
          types.restore(types_entry);
          enclosing.restore(enclosing_entry);
          return r;
        }
        std::vector<TypeRecord> declared = types.diff(types_entry);
        types.restore(types_entry);
        enclosing.restore(enclosing_entry);
        types.pop();
        types.push(TypeRecord{name, std::move(declared)});
        return Success{};
      },
      {body});
}

ParserPtr superclass(ParserPtr type) {
  return custom(
      "superclass",
      [type](ParseContext& ctx) -> ParseResult {
        const std::size_t start = ctx.pos();
        const std::string name = string_at(ctx, 0, "superclass");
        const AggregateSnapshot entry = ctx.snapshot();
        ParseResult r = type->parse(ctx);
        if (!r) return r;
        const std::string parent = string_at(ctx, 0, "superclass");
        const std::vector<std::string> outer = ctx.state<EnclosingClasses>().elements();
        if (parent != name && std::find(outer.begin(), outer.end(), parent) == outer.end()) {
          return Success{};
        }
        ctx.restore(entry);
        return ctx.fail(start, [name, parent] {
          return parent == name ? "class " + name + " cannot inherit from itself"
                                : "class " + name + " cannot inherit from enclosing class " + parent;
        });
      },
      {type});
}

ParserPtr anon_class_inherit() {
  return perform([](ParseContext& ctx) { inherit(ctx, string_at(ctx, 1, "anon_class_inherit")); });
}

ParserPtr class_guard(ParserPtr iden) {
  return ahead(seq(std::move(iden), predicate(
                                        [](ParseContext& ctx) {
                                          return is_type(ctx, string_at(ctx, 0, "class_guard"));
                                        },
                                        "expected a class name")));
}

ParserPtr type_name(ParserPtr iden) {
  return custom(
      "type_name",
      [iden](ParseContext& ctx) -> ParseResult {
        const std::size_t start = ctx.pos();
        const AggregateSnapshot entry = ctx.snapshot();
        ParseResult r = iden->parse(ctx);
        if (!r) return r;
        const std::string name = string_at(ctx, 0, "type_name");
        if (is_type(ctx, name)) return Success{};
        ctx.restore(entry);
        return ctx.fail(start, [name] { return "unknown type " + name; });
      },
      {iden});
}

}  // namespace rwd::examply
