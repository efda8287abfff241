#include <doctest.h>

#include "srank/finite.hpp"
#include "srank/presentation.hpp"
#include "util.hpp"

using namespace srank;

TEST_CASE("presentation: two-relation family parses") {
  const auto p = parse_presentation(testutil::kTwoRel3);
  CHECK(p.rank() == 2);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] == Relation{{3, 0}, {1, 1}});
  CHECK(p.relations[1] == Relation{{4, 0}, {0, 2}});
}

TEST_CASE("presentation: single absorbing relation") {
  const auto p = parse_presentation(testutil::kAbsorb);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0] == Relation{{1, 1}, {1, 0}});
}

TEST_CASE("presentation: trivial relation is dropped with a diagnostic") {
  const auto p = parse_presentation("gens a; rel a = a;");
  CHECK(p.rank() == 1);
  CHECK(p.relations.empty());
  CHECK(p.diagnostics.size() == 1);
}

TEST_CASE("presentation: element expressions") {
  const auto p = parse_presentation(testutil::kTwoRel3);
  CHECK(parse_element("2a + b", p) == ExponentVector{2, 1});
  CHECK(parse_element("0", p) == ExponentVector{0, 0});
  CHECK(parse_element("5 a", p) == ExponentVector{5, 0});
  CHECK(parse_element("2*a + a", p) == ExponentVector{3, 0});
  CHECK_THROWS_AS(parse_element("c", p), ParseError);
  CHECK_THROWS_AS(parse_element("-a", p), ParseError);
}

TEST_CASE("presentation: errors carry positions") {
  try {
    parse_presentation("gens a b;\nrel 3 a = c;");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_AS(parse_presentation("gens a a;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rel a = 0;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens a; rel 1.5 a = 0;"), ParseError);
}

TEST_CASE("presentation: pretty-print round trip") {
  for (const char* text : {testutil::kTwoRel3, testutil::kTwoRel5, testutil::kAbsorb, testutil::kThreeA,
                           testutil::kInfinity, testutil::kFourNine}) {
    const auto p = parse_presentation(text);
    const auto q = parse_presentation(format_presentation(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relations == p.relations);
  }
}

TEST_CASE("cayley: three-element table") {
  const auto doc = parse_cayley(testutil::kThreeATable);
  CHECK(doc.labels.size() == 3);
  CHECK(doc.zero == 0);
  const auto m = validate(doc);
  CHECK(m.add(1, 1) == 2);
  CHECK(m.add(1, 2) == 1);
}

TEST_CASE("cayley: trivial monoid and identity violation") {
  CHECK(validate(parse_cayley(R"({"elements": ["0"], "zero": "0", "table": [["0"]]})")).size() == 1);
  try {
    parse_cayley(R"({"elements": ["0", "a"], "zero": "0", "table": [["0", "0"], ["a", "a"]]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("identity axiom violated") != std::string::npos);
  }
}

TEST_CASE("cayley: round trip through format_cayley") {
  const auto doc = parse_cayley(testutil::kThreeATable);
  const auto again = parse_cayley(format_cayley(doc));
  CHECK(again.labels == doc.labels);
  CHECK(again.table == doc.table);
  CHECK(again.zero == doc.zero);
}
