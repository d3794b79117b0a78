#include <doctest.h>

#include "logs.hpp"
#include "oracle_laws.hpp"
#include "rewind/error.hpp"
#include "rewind/oracle.hpp"

using namespace rwd;
using namespace rwd::oracle;

namespace {

const Change a{"a", std::int64_t{1}};
const Change b{"b", std::int64_t{2}};
const Change c{"c", std::string("three")};

void require_ok(const testing::LawReport& r) {
  for (const std::string& f : r.failures) MESSAGE(f);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("snapshot is the identity") {
  CHECK(snapshot({}) == ChangeLog{});
  CHECK(snapshot({a}) == ChangeLog{a});
  CHECK(snapshot({a, b, c}) == ChangeLog{a, b, c});
}

TEST_CASE("diff chops off the snapshot prefix") {
  CHECK(diff({a}, {a, b, c}) == ChangeLog{b, c});
  CHECK(diff({a, b}, {a, b}).empty());
  CHECK_THROWS_AS((void)diff({b}, {a, b}), ContractViolation);
  CHECK_THROWS_AS((void)diff({a, b}, {a}), ContractViolation);
}

TEST_CASE("apply_change appends, duplicates allowed") {
  CHECK(apply_change(a, {}) == ChangeLog{a});
  CHECK(apply_change(b, {a}) == ChangeLog{a, b});
  CHECK(apply_change(a, {a}) == ChangeLog{a, a});
  CHECK(apply_change(b)({a}) == ChangeLog{a, b});
}

TEST_CASE("restore ignores the current state") {
  CHECK(restore({a}, {a, b, c}) == ChangeLog{a});
  CHECK(restore({}, {a}).empty());
  CHECK(restore({c}, {a}) == ChangeLog{c});
}

TEST_CASE("merge appends the delta") {
  CHECK(merge({b, c}, {a}) == ChangeLog{a, b, c});
  CHECK(merge({}, {a, b}) == ChangeLog{a, b});
  CHECK(merge(ChangeLog{c})({a}) == ChangeLog{a, c});
}

TEST_CASE("compose_two and reduce_n") {
  std::vector<Transform> s{apply_change(a), apply_change(b), apply_change(c)};
  auto composed = compose_two(s);
  REQUIRE(composed.size() == 2);
  CHECK(composed[0]({}) == ChangeLog{a, b});
  CHECK(reduce_n(0, s)({c}) == ChangeLog{c});
  CHECK(reduce_n(1, s)({}) == ChangeLog{a});
  CHECK(reduce_n(3, s)({}) == ChangeLog{a, b, c});
  CHECK_THROWS_AS((void)compose_two({apply_change(a)}), ContractViolation);
  CHECK_THROWS_AS((void)reduce_n(4, s), ContractViolation);
}

TEST_CASE("call composes the trace on success only") {
  ModelParser empty{[](const LogState&) { return std::vector<Transform>{}; },
                    [](const LogState&) { return Outcome::success; }};
  CHECK(call(empty, {a}) == ChangeLog{a});

  ModelParser two{[](const LogState&) {
                    return std::vector<Transform>{apply_change(b), apply_change(c)};
                  },
                  [](const LogState&) { return Outcome::success; }};
  CHECK(call(two, {a}) == ChangeLog{a, b, c});

  ModelParser failing = two;
  failing.result = [](const LogState&) { return Outcome::failure; };
  CHECK(call(failing, {a}) == ChangeLog{a});
}

TEST_CASE("log enumeration counts") {
  CHECK(testing::all_logs(testing::small_alphabet(), 5).size() == 364);
  CHECK(testing::all_logs(testing::small_alphabet(), 0).size() == 1);
}

TEST_CASE("laws hold exhaustively over small logs") {
  require_ok(testing::check_snapshot_restore(4));
  require_ok(testing::check_diff_merge(5));
  require_ok(testing::check_merge_append(4));
  require_ok(testing::check_call(3, 2));
}
