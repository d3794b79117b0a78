#include <doctest.h>

#include <stdexcept>

#include "rewind/ast_dump.hpp"

using namespace rwd;

namespace {

AstValue sample() {
  AstNode inner{"Name", {AstValue::text("x")}, {4, 5}};
  AstNode ctor{"CtorCall",
               {AstValue::text("MyClass"), AstValue::list({}), AstValue::node(inner)},
               {0, 12}};
  return AstValue::node(ctor);
}

}  // namespace

TEST_CASE("json layout") {
  const std::string json = dump_ast({sample(), AstValue::none()}, AstFormat::json);
  CHECK(json ==
        "[\n"
        "  {\n"
        "    \"kind\": \"CtorCall\",\n"
        "    \"span\": [\n"
        "      0,\n"
        "      12\n"
        "    ],\n"
        "    \"children\": [\n"
        "      \"MyClass\",\n"
        "      [],\n"
        "      {\n"
        "        \"kind\": \"Name\",\n"
        "        \"span\": [\n"
        "          4,\n"
        "          5\n"
        "        ],\n"
        "        \"children\": [\n"
        "          \"x\"\n"
        "        ]\n"
        "      }\n"
        "    ]\n"
        "  },\n"
        "  null\n"
        "]\n");
}

TEST_CASE("tree layout") {
  const std::string tree = dump_ast({sample()}, AstFormat::tree);
  CHECK(tree ==
        "CtorCall [0,12)\n"
        "  \"MyClass\"\n"
        "  []\n"
        "  Name [4,5)\n"
        "    \"x\"\n");
}

TEST_CASE("json round trip") {
  const std::vector<AstValue> values{sample(), AstValue::none(),
                                     AstValue::list({AstValue::text("a\"b\n")})};
  const std::string json = dump_ast(values, AstFormat::json);
  CHECK(load_ast_json(json) == values);
  CHECK(dump_ast(load_ast_json(json), AstFormat::json) == json);
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(load_ast_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(load_ast_json("{\"kind\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(load_ast_json("[{\"kind\": \"X\"}]"), std::invalid_argument);
  CHECK_THROWS_AS(load_ast_json("[3]"), std::invalid_argument);
}
