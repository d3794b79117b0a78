#include "rewind/combinators.hpp"

#include <algorithm>
#include <utility>

#include "rewind/error.hpp"

namespace rwd {

namespace {

std::vector<const Parser*> raw(const std::vector<ParserPtr>& ps) {
  std::vector<const Parser*> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.get());
  return out;
}

void require_children(const std::vector<ParserPtr>& ps, const char* who) {
  if (ps.empty()) throw ConfigurationError(std::string(who) + " needs at least one child");
  for (const auto& p : ps) {
    if (!p) throw ConfigurationError(std::string(who) + " given a null child");
  }
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out + '"';
}

// Throws when a loop iteration succeeded without observable progress.
void check_progress(ParseContext& ctx, const AggregateSnapshot& before, const char* who) {
  if (ctx.pos() != before.position) return;
  if (ctx.equivalent(before, ctx.snapshot())) {
    throw ContractViolation(std::string(who) +
                            ": iteration succeeded without consuming input or changing state");
  }
}

class Single : public Parser {
 public:
  explicit Single(ParserPtr child) : child_(std::move(child)) {
    if (!child_) throw ConfigurationError("combinator given a null child");
  }
  std::vector<const Parser*> children() const override { return {child_.get()}; }
  bool can_match_empty(const NullableFn& nullable) const override {
    return nullable(child_.get());
  }

 protected:
  ParserPtr child_;
};

// Wrappers that always succeed whatever the child does.
class AlwaysSucceeds : public Single {
 public:
  using Single::Single;
  bool can_match_empty(const NullableFn&) const override { return true; }
};

class Seq final : public Parser {
 public:
  explicit Seq(std::vector<ParserPtr> children) : children_(std::move(children)) {
    require_children(children_, "seq");
  }

  ParseResult parse(ParseContext& ctx) const override {
    const AggregateSnapshot snap = ctx.snapshot();
    for (const auto& child : children_) {
      ParseResult r = child->parse(ctx);
      if (!r) {
        ctx.restore(snap);
        return r;
      }
    }
    return Success{};
  }

  std::string kind() const override { return "seq"; }
  std::vector<const Parser*> children() const override { return raw(children_); }
  bool can_match_empty(const NullableFn& nullable) const override {
    return std::all_of(children_.begin(), children_.end(),
                       [&](const ParserPtr& c) { return nullable(c.get()); });
  }
  std::vector<const Parser*> entry_children(const NullableFn& nullable) const override {
    std::vector<const Parser*> out;
    for (const auto& c : children_) {
      out.push_back(c.get());
      if (!nullable(c.get())) break;
    }
    return out;
  }

 private:
  std::vector<ParserPtr> children_;
};

class Choice final : public Parser {
 public:
  explicit Choice(std::vector<ParserPtr> children) : children_(std::move(children)) {
    require_children(children_, "choice");
  }

  ParseResult parse(ParseContext& ctx) const override {
    const std::size_t entry = ctx.pos();
    for (const auto& child : children_) {
      if (child->parse(ctx)) return Success{};
    }
    return ParseResult::failure(entry, "no alternative matched");
  }

  std::string kind() const override { return "choice"; }
  std::vector<const Parser*> children() const override { return raw(children_); }
  bool can_match_empty(const NullableFn& nullable) const override {
    return std::any_of(children_.begin(), children_.end(),
                       [&](const ParserPtr& c) { return nullable(c.get()); });
  }

 private:
  std::vector<ParserPtr> children_;
};

class Opt final : public AlwaysSucceeds {
 public:
  using AlwaysSucceeds::AlwaysSucceeds;
  ParseResult parse(ParseContext& ctx) const override {
    (void)child_->parse(ctx);
    return Success{};
  }
  std::string kind() const override { return "opt"; }
};

class Repeat final : public Single {
 public:
  Repeat(ParserPtr child, std::size_t min) : Single(std::move(child)), min_(min) {}

  ParseResult parse(ParseContext& ctx) const override {
    const char* who = min_ == 0 ? "zero_more" : "one_more";
    for (std::size_t count = 0;; ++count) {
      const AggregateSnapshot before = ctx.snapshot();
      ParseResult r = child_->parse(ctx);
      if (!r) {
        if (count < min_) return r;
        return Success{};
      }
      check_progress(ctx, before, who);
    }
  }

  std::string kind() const override { return min_ == 0 ? "zero_more" : "one_more"; }
  bool can_match_empty(const NullableFn& nullable) const override {
    return min_ == 0 || nullable(child_.get());
  }

 private:
  std::size_t min_;
};

class Ahead final : public AlwaysSucceeds {
 public:
  using AlwaysSucceeds::AlwaysSucceeds;
  ParseResult parse(ParseContext& ctx) const override {
    const AggregateSnapshot snap = ctx.snapshot();
    ParseResult r = child_->parse(ctx);
    if (r) ctx.restore(snap);
    return r;
  }
  std::string kind() const override { return "ahead"; }
};

class Not final : public AlwaysSucceeds {
 public:
  using AlwaysSucceeds::AlwaysSucceeds;
  ParseResult parse(ParseContext& ctx) const override {
    const AggregateSnapshot snap = ctx.snapshot();
    if (!child_->parse(ctx)) return Success{};
    ctx.restore(snap);
    return ctx.fail("unexpected input");
  }
  std::string kind() const override { return "not"; }
};

class CharPred final : public Parser {
 public:
  CharPred(std::function<bool(char)> pred, std::string label)
      : pred_(std::move(pred)), label_(std::move(label)) {}

  ParseResult parse(ParseContext& ctx) const override {
    if (!ctx.at_end() && pred_(ctx.current())) {
      ctx.advance(1);
      return Success{};
    }
    return ctx.fail([label = label_] { return "expected " + label; });
  }

  std::string kind() const override { return "char_pred " + label_; }
  bool can_match_empty(const NullableFn&) const override { return false; }

 private:
  std::function<bool(char)> pred_;
  std::string label_;
};

class Str final : public Parser {
 public:
  Str(std::string literal, bool word) : literal_(std::move(literal)), word_(word) {}

  ParseResult parse(ParseContext& ctx) const override {
    if (ctx.rest().substr(0, literal_.size()) != literal_) {
      return ctx.fail([lit = literal_] { return "expected " + quoted(lit); });
    }
    ctx.advance(literal_.size());
    if (word_) {
      ParseContext::MuteFailures mute(ctx);
      if (!ctx.whitespace().parse(ctx)) {
        throw ContractViolation("whitespace parser must not fail");
      }
    }
    return Success{};
  }

  std::string kind() const override { return (word_ ? "word " : "str ") + quoted(literal_); }
  bool can_match_empty(const NullableFn&) const override { return literal_.empty(); }

 private:
  std::string literal_;
  bool word_;
};

class Whitespace final : public Parser {
 public:
  ParseResult parse(ParseContext& ctx) const override {
    ParseContext::MuteFailures mute(ctx);
    return ctx.whitespace().parse(ctx);
  }
  std::string kind() const override { return "ws"; }
};

class EndOfInput final : public Parser {
 public:
  ParseResult parse(ParseContext& ctx) const override {
    if (ctx.at_end()) return Success{};
    return ctx.fail("expected end of input");
  }
  std::string kind() const override { return "end_of_input"; }
};

class Until final : public Parser {
 public:
  Until(ParserPtr item, ParserPtr terminator)
      : item_(std::move(item)), terminator_(std::move(terminator)) {
    if (!item_ || !terminator_) throw ConfigurationError("until given a null child");
  }

  ParseResult parse(ParseContext& ctx) const override {
    const AggregateSnapshot entry = ctx.snapshot();
    for (bool first = true;; first = false) {
      const AggregateSnapshot before = first ? entry : ctx.snapshot();
      if (terminator_->parse(ctx)) return Success{};
      ParseResult r = item_->parse(ctx);
      if (!r) {
        ctx.restore(entry);
        return r;
      }
      check_progress(ctx, before, "until");
    }
  }

  std::string kind() const override { return "until"; }
  std::vector<const Parser*> children() const override {
    return {item_.get(), terminator_.get()};
  }
  bool can_match_empty(const NullableFn& nullable) const override {
    return nullable(terminator_.get());
  }

 private:
  ParserPtr item_;
  ParserPtr terminator_;
};

class Predicate final : public Parser {
 public:
  Predicate(Condition cond, std::function<Diagnostic(ParseContext&)> msg)
      : cond_(std::move(cond)), msg_(std::move(msg)) {}

  ParseResult parse(ParseContext& ctx) const override {
    if (cond_(ctx)) return Success{};
    return ctx.fail(msg_(ctx));
  }
  std::string kind() const override { return "predicate"; }

 private:
  Condition cond_;
  std::function<Diagnostic(ParseContext&)> msg_;
};

class Perform final : public Parser {
 public:
  explicit Perform(Effect effect) : effect_(std::move(effect)) {}
  ParseResult parse(ParseContext& ctx) const override {
    effect_(ctx);
    return Success{};
  }
  std::string kind() const override { return "perform"; }

 private:
  Effect effect_;
};

class AndDo final : public Single {
 public:
  AndDo(ParserPtr child, Effect effect) : Single(std::move(child)), effect_(std::move(effect)) {}
  ParseResult parse(ParseContext& ctx) const override {
    ParseResult r = child_->parse(ctx);
    if (r) effect_(ctx);
    return r;
  }
  std::string kind() const override { return "and_do"; }

 private:
  Effect effect_;
};

class Lexeme final : public Single {
 public:
  Lexeme(std::string label, ParserPtr child) : Single(std::move(child)), label_(std::move(label)) {}

  ParseResult parse(ParseContext& ctx) const override {
    const std::size_t start = ctx.pos();
    ParseContext::MuteFailures mute(ctx);
    if (!child_->parse(ctx)) {
      mute.release();
      return ctx.fail(start, [label = label_] { return "expected " + label; });
    }
    if (!ctx.whitespace().parse(ctx)) {
      throw ContractViolation("whitespace parser must not fail");
    }
    return Success{};
  }
  std::string kind() const override { return "lexeme " + label_; }

 private:
  std::string label_;
};

class Capture final : public Single {
 public:
  using Single::Single;
  ParseResult parse(ParseContext& ctx) const override {
    const std::size_t start = ctx.pos();
    ParseResult r = child_->parse(ctx);
    if (r) {
      ctx.state<AstStack>().push(
          AstValue::text(std::string(ctx.text().substr(start, ctx.pos() - start))));
    }
    return r;
  }
  std::string kind() const override { return "capture"; }
};

// Pops every value above `depth`, returning them first-pushed first.
std::vector<AstValue> pop_above(AstStack& stack, std::size_t depth, const char* who) {
  if (stack.size() < depth) {
    throw ContractViolation(std::string(who) + ": child popped values it did not push");
  }
  std::vector<AstValue> values;
  values.reserve(stack.size() - depth);
  while (stack.size() > depth) values.push_back(*stack.pop());
  std::reverse(values.begin(), values.end());
  return values;
}

class Collect final : public Single {
 public:
  using Single::Single;
  ParseResult parse(ParseContext& ctx) const override {
    AstStack& stack = ctx.state<AstStack>();
    const std::size_t depth = stack.size();
    ParseResult r = child_->parse(ctx);
    if (!r) return r;
    stack.push(AstValue::list(pop_above(stack, depth, "collect")));
    return r;
  }
  std::string kind() const override { return "collect"; }
};

class Build final : public Single {
 public:
  Build(ParserPtr child, std::size_t arity, std::function<AstNode(std::vector<AstValue>)> make)
      : Single(std::move(child)), arity_(arity), make_(std::move(make)) {}

  ParseResult parse(ParseContext& ctx) const override {
    AstStack& stack = ctx.state<AstStack>();
    const std::size_t start = ctx.pos();
    const std::size_t depth = stack.size();
    ParseResult r = child_->parse(ctx);
    if (!r) return r;
    if (stack.size() < depth + arity_) {
      throw ContractViolation("build: expected " + std::to_string(arity_) +
                              " values on the AST stack, child pushed " +
                              std::to_string(stack.size() >= depth ? stack.size() - depth : 0));
    }
    std::vector<AstValue> values = pop_above(stack, stack.size() - arity_, "build");
    AstNode n = make_(std::move(values));
    n.span = Span{start, ctx.pos()};
    stack.push(AstValue::node(std::move(n)));
    return r;
  }
  std::string kind() const override { return "build/" + std::to_string(arity_); }

 private:
  std::size_t arity_;
  std::function<AstNode(std::vector<AstValue>)> make_;
};

class Maybe final : public AlwaysSucceeds {
 public:
  using AlwaysSucceeds::AlwaysSucceeds;
  ParseResult parse(ParseContext& ctx) const override {
    if (!child_->parse(ctx)) ctx.state<AstStack>().push(AstValue::none());
    return Success{};
  }
  std::string kind() const override { return "maybe"; }
};

}  // namespace

ParserPtr seq(std::vector<ParserPtr> children) { return std::make_shared<Seq>(std::move(children)); }
ParserPtr choice(std::vector<ParserPtr> children) {
  return std::make_shared<Choice>(std::move(children));
}
ParserPtr opt(ParserPtr p) { return std::make_shared<Opt>(std::move(p)); }
ParserPtr zero_more(ParserPtr p) { return std::make_shared<Repeat>(std::move(p), 0); }
ParserPtr one_more(ParserPtr p) { return std::make_shared<Repeat>(std::move(p), 1); }
ParserPtr ahead(ParserPtr p) { return std::make_shared<Ahead>(std::move(p)); }
ParserPtr not_(ParserPtr p) { return std::make_shared<Not>(std::move(p)); }

ParserPtr char_pred(std::function<bool(char)> pred, std::string label) {
  return std::make_shared<CharPred>(std::move(pred), std::move(label));
}
ParserPtr any_char() {
  return char_pred([](char) { return true; }, "any character");
}
ParserPtr str(std::string literal) { return std::make_shared<Str>(std::move(literal), false); }
ParserPtr word(std::string literal) { return std::make_shared<Str>(std::move(literal), true); }
ParserPtr ws() { return std::make_shared<Whitespace>(); }
ParserPtr end_of_input() { return std::make_shared<EndOfInput>(); }

ParserPtr until(ParserPtr item, ParserPtr terminator) {
  return std::make_shared<Until>(std::move(item), std::move(terminator));
}

ParserPtr predicate(Condition cond, Diagnostic msg) {
  return std::make_shared<Predicate>(std::move(cond),
                                     [msg = std::move(msg)](ParseContext&) { return msg; });
}
ParserPtr predicate(Condition cond, std::function<Diagnostic(ParseContext&)> msg) {
  return std::make_shared<Predicate>(std::move(cond), std::move(msg));
}
ParserPtr perform(Effect effect) { return std::make_shared<Perform>(std::move(effect)); }
ParserPtr and_do(ParserPtr p, Effect effect) {
  return std::make_shared<AndDo>(std::move(p), std::move(effect));
}
ParserPtr lexeme(std::string label, ParserPtr p) {
  return std::make_shared<Lexeme>(std::move(label), std::move(p));
}

ParserPtr capture(ParserPtr p) { return std::make_shared<Capture>(std::move(p)); }
ParserPtr collect(ParserPtr p) { return std::make_shared<Collect>(std::move(p)); }
ParserPtr build(ParserPtr p, std::size_t arity, std::function<AstNode(std::vector<AstValue>)> make) {
  return std::make_shared<Build>(std::move(p), arity, std::move(make));
}
ParserPtr node(std::string kind, std::size_t arity, ParserPtr p) {
  return build(std::move(p), arity, [kind = std::move(kind)](std::vector<AstValue> values) {
    return AstNode{kind, std::move(values), {}};
  });
}
ParserPtr maybe(ParserPtr p) { return std::make_shared<Maybe>(std::move(p)); }
ParserPtr push_value(AstValue v) {
  return perform([v = std::move(v)](ParseContext& ctx) { ctx.state<AstStack>().push(v); });
}

}  // namespace rwd
