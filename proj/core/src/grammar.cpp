#include "rewind/grammar.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "rewind/combinators.hpp"
#include "rewind/error.hpp"
#include "rewind/leftrec.hpp"

namespace rwd {

namespace {

class RuleRef final : public Parser {
 public:
  explicit RuleRef(std::string name) : name_(std::move(name)) {}

  ParseResult parse(ParseContext& ctx) const override {
    const Parser* target = target_.load(std::memory_order_acquire);
    if (target == nullptr) {
      throw ContractViolation("reference to rule " + name_ + " used before the grammar was frozen");
    }
    return target->parse(ctx);
  }

  std::string kind() const override { return "ref " + name_; }
  std::vector<const Parser*> children() const override {
    const Parser* target = target_.load(std::memory_order_acquire);
    if (target == nullptr) return {};
    return {target};
  }
  bool can_match_empty(const NullableFn& nullable) const override {
    const Parser* target = target_.load(std::memory_order_acquire);
    return target == nullptr || nullable(target);
  }

  const std::string& name() const { return name_; }

  void bind(const Parser* target) const {
    const Parser* expected = nullptr;
    if (!target_.compare_exchange_strong(expected, target) && expected != target) {
      throw ConfigurationError("reference to rule " + name_ +
                               " is already bound to a rule of another grammar");
    }
  }

 private:
  std::string name_;
  mutable std::atomic<const Parser*> target_{nullptr};
};

class NoWhitespace final : public Parser {
 public:
  ParseResult parse(ParseContext&) const override { return Success{}; }
  std::string kind() const override { return "no_whitespace"; }
};

// Every parser reachable from `roots` through children(), in discovery order.
std::vector<const Parser*> reachable(const std::vector<const Parser*>& roots) {
  std::vector<const Parser*> order;
  std::unordered_set<const Parser*> seen;
  std::vector<const Parser*> work(roots.rbegin(), roots.rend());
  while (!work.empty()) {
    const Parser* p = work.back();
    work.pop_back();
    if (p == nullptr || !seen.insert(p).second) continue;
    order.push_back(p);
    auto kids = p->children();
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) work.push_back(*it);
  }
  return order;
}

}  // namespace

ParserPtr ref(std::string name) { return std::make_shared<RuleRef>(std::move(name)); }
ParserPtr no_whitespace() { return std::make_shared<NoWhitespace>(); }

GrammarDef& GrammarDef::rule(std::string name, ParserPtr p) {
  if (!p) throw ConfigurationError("rule " + name + " defined as a null parser");
  if (!rules_.emplace(name, std::move(p)).second) {
    throw ConfigurationError("rule " + name + " is defined twice");
  }
  return *this;
}

ParserPtr GrammarDef::get_rule(const std::string& name) const {
  auto it = rules_.find(name);
  if (it == rules_.end()) throw ConfigurationError("no rule named " + name);
  return it->second;
}

GrammarDef& GrammarDef::root(std::string name) {
  root_ = std::move(name);
  return *this;
}

GrammarDef& GrammarDef::whitespace(ParserPtr p) {
  whitespace_ = std::move(p);
  return *this;
}

GrammarDef& GrammarDef::require_cell(std::type_index key, CellFactory make) {
  for (const auto& [k, _] : cells_) {
    if (k == key) return *this;
  }
  cells_.emplace_back(key, std::move(make));
  return *this;
}

void check_recursion_annotated(const std::vector<const Parser*>& roots,
                               const std::map<const Parser*, std::string>& names) {
  const std::vector<const Parser*> nodes = reachable(roots);

  // Least fixpoint of "may succeed without consuming input".
  std::unordered_map<const Parser*, bool> nullable;
  for (const Parser* p : nodes) nullable[p] = false;
  const Parser::NullableFn lookup = [&](const Parser* p) {
    auto it = nullable.find(p);
    return it == nullable.end() || it->second;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (const Parser* p : nodes) {
      if (!nullable[p] && p->can_match_empty(lookup)) {
        nullable[p] = true;
        changed = true;
      }
    }
  }

  enum class Mark { unvisited, active, done };
  std::unordered_map<const Parser*, Mark> mark;
  std::vector<const Parser*> path;

  auto describe = [&](std::vector<const Parser*> cycle) {
    std::vector<std::string> labels;
    for (const Parser* p : cycle) {
      auto it = names.find(p);
      if (it != names.end()) labels.push_back(it->second);
    }
    if (labels.empty()) labels.push_back(cycle.front()->kind());
    std::ostringstream os;
    for (const auto& l : labels) os << l << " -> ";
    os << labels.front();
    return os.str();
  };

  std::function<void(const Parser*)> visit = [&](const Parser* p) {
    mark[p] = Mark::active;
    path.push_back(p);
    for (const Parser* next : p->entry_children(lookup)) {
      if (next == nullptr || next->guards_recursion()) continue;
      const Mark m = mark[next];
      if (m == Mark::active) {
        auto start = std::find(path.begin(), path.end(), next);
        throw ConfigurationError("left-recursive cycle without leftrec: " +
                                 describe(std::vector<const Parser*>(start, path.end())));
      }
      if (m == Mark::unvisited) visit(next);
    }
    path.pop_back();
    mark[p] = Mark::done;
  };

  for (const Parser* p : nodes) {
    if (!p->guards_recursion() && mark[p] == Mark::unvisited) visit(p);
  }
}

FrozenGrammar GrammarDef::freeze() const {
  if (root_.empty()) throw ConfigurationError("grammar has no root rule");
  auto root_it = rules_.find(root_);
  if (root_it == rules_.end()) throw ConfigurationError("root rule " + root_ + " is not defined");

  auto data = std::make_shared<FrozenGrammar::Data>();
  data->rules = rules_;
  data->root = root_it->second;
  data->whitespace = whitespace_ ? whitespace_ : default_whitespace();
  data->cells = cells_;

  std::vector<const Parser*> roots;
  std::map<const Parser*, std::string> names;
  for (const auto& [name, p] : rules_) {
    roots.push_back(p.get());
    names.emplace(p.get(), name);
  }
  roots.push_back(data->whitespace.get());

  // Bind references until no new parsers become reachable.
  std::unordered_set<const Parser*> seen;
  std::vector<const Parser*> work(roots.begin(), roots.end());
  while (!work.empty()) {
    const Parser* p = work.back();
    work.pop_back();
    if (!seen.insert(p).second) continue;
    if (const auto* r = dynamic_cast<const RuleRef*>(p)) {
      auto it = rules_.find(r->name());
      if (it == rules_.end()) throw ConfigurationError("unresolved reference " + r->name());
      r->bind(it->second.get());
    }
    for (const Parser* c : p->children()) work.push_back(c);
  }

  check_recursion_annotated(roots, names);
  return FrozenGrammar(std::move(data));
}

ParserPtr FrozenGrammar::rule(const std::string& name) const {
  auto it = data_->rules.find(name);
  if (it == data_->rules.end()) throw ConfigurationError("no rule named " + name);
  return it->second;
}

std::vector<std::string> FrozenGrammar::rule_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : data_->rules) out.push_back(name);
  return out;
}

std::string FrozenGrammar::structure() const {
  std::ostringstream os;
  std::function<void(const Parser*, int)> dump = [&](const Parser* p, int depth) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << p->kind();
    if (const auto* r = dynamic_cast<const RuleRef*>(p)) {
      auto kids = r->children();
      const bool bound = !kids.empty() && kids.front() == data_->rules.at(r->name()).get();
      os << (bound ? " (bound)" : " (unbound)") << '\n';
      return;
    }
    os << '\n';
    for (const Parser* c : p->children()) dump(c, depth + 1);
  };
  for (const auto& [name, p] : data_->rules) {
    os << name << " =\n";
    dump(p.get(), 1);
  }
  return os.str();
}

std::shared_ptr<ParseContext> FrozenGrammar::make_context(std::string_view input) const {
  auto ctx = std::make_shared<ParseContext>(input);
  for (const auto& [key, make] : data_->cells) ctx->add_cell(key, make());
  if (!ctx->has_state<AstStack>()) ctx->add_cell<AstStack>();
  if (!ctx->has_state<LeftRecTable>()) ctx->add_cell<LeftRecTable>();
  ctx->set_whitespace(data_->whitespace.get());
  ctx->seal();
  return ctx;
}

ParseOutcome FrozenGrammar::parse(std::string_view input, const ParseOptions& options) const {
  ParseOutcome out;
  out.context = make_context(input);
  ParseContext& ctx = *out.context;
  ctx.set_trace(options.trace);

  {
    ParseContext::MuteFailures mute(ctx);
    if (!ctx.whitespace().parse(ctx)) throw ContractViolation("whitespace parser must not fail");
  }

  ParseResult r = data_->root->parse(ctx);
  if (r && (!options.full_match || ctx.at_end())) {
    out.success = true;
    std::vector<AstValue> top_down = ctx.state<AstStack>().elements();
    out.ast.assign(top_down.rbegin(), top_down.rend());
    ctx.set_trace(nullptr);
    return out;
  }

  // A failure recorded at or past the point where the root stopped is more
  // specific than "expected end of input".
  Failure failure = r ? Failure{ctx.pos(), "expected end of input"} : r.failure();
  if (ctx.furthest() && ctx.furthest()->position >= failure.position) failure = *ctx.furthest();
  const auto lc = ctx.lines().line_col(failure.position);
  out.error = SourceError{failure.position, lc.line, lc.column, failure.render()};
  ctx.set_trace(nullptr);
  return out;
}

}  // namespace rwd
