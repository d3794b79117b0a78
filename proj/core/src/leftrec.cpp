#include "rewind/leftrec.hpp"

#include "rewind/error.hpp"

namespace rwd {

LeftRecTable::Map LeftRecTable::diff(const Map& snap) const {
  if (!(snap == map_)) {
    throw ContractViolation("diff on LeftRecTable: table changed since the snapshot");
  }
  return Map();
}

void LeftRecTable::merge(const Map& /*delta*/) {}

namespace {

class LeftRec final : public Parser {
 public:
  explicit LeftRec(ParserPtr wrapped) : wrapped_(std::move(wrapped)) {
    if (!wrapped_) throw ConfigurationError("leftrec given a null child");
  }

  ParseResult parse(ParseContext& ctx) const override {
    LeftRecTable& table = ctx.state<LeftRecTable>();
    const LeftRecKey key{this, ctx.pos()};

    if (const LeftRecEntry* entry = table.get(key)) {
      if (entry->phase == LeftRecEntry::Phase::blocked) {
        return ParseResult::failure(key.position, "left-recursive invocation blocked");
      }
      ctx.merge(*entry->seed);
      return Success{};
    }

    table.put(key, LeftRecEntry{LeftRecEntry::Phase::blocked, nullptr});
    const AggregateSnapshot blocked = ctx.snapshot();

    ParseResult r = wrapped_->parse(ctx);
    if (!r) {
      table.remove(key);
      return r;
    }

    auto best = std::make_shared<const AggregateDelta>(ctx.diff(blocked));
    for (;;) {
      ctx.restore(blocked);
      table.put(key, LeftRecEntry{LeftRecEntry::Phase::seeded, best});
      const AggregateSnapshot seeded = ctx.snapshot();
      if (!wrapped_->parse(ctx) || ctx.pos() <= best->end_position) break;
      best = std::make_shared<const AggregateDelta>(ctx.diff(seeded));
    }

    ctx.restore(blocked);
    table.remove(key);
    ctx.merge(*best);
    return Success{};
  }

  std::string kind() const override { return "leftrec"; }
  std::vector<const Parser*> children() const override { return {wrapped_.get()}; }
  bool can_match_empty(const NullableFn& nullable) const override {
    return nullable(wrapped_.get());
  }
  bool guards_recursion() const override { return true; }

 private:
  ParserPtr wrapped_;
};

}  // namespace

ParserPtr leftrec(ParserPtr wrapped) { return std::make_shared<LeftRec>(std::move(wrapped)); }

}  // namespace rwd
