#include <doctest.h>

#include <set>

#include "srank/harness.hpp"
#include "util.hpp"

using namespace srank;

namespace {

bool all_facts_pass(const Json& r) {
  for (const auto& f : r["facts"])
    if (f["status"] != "pass") return false;
  return true;
}

// Facts pass and no theorem check fails. Undersized windows can pin a
// bracket too low; the strong/weak check is what exposes that.
bool pins(const Json& r) {
  if (!all_facts_pass(r)) return false;
  for (const auto& a : r["assertions"])
    if (a["status"] == "fail") return false;
  return true;
}

}  // namespace

TEST_CASE("harness: fixture files match the catalog") {
  std::set<std::string> ids;
  for (const auto& f : fixture_catalog()) {
    CHECK(ids.insert(f.id).second);
    CHECK(testutil::read_source("fixtures/" + f.filename()) == f.text);
  }
  CHECK(ids.size() == 9);
  CHECK_THROWS_AS(find_fixture("F99"), std::invalid_argument);
}

TEST_CASE("harness: recorded pinning radius is the smallest that pins") {
  for (const auto& f : fixture_catalog()) {
    if (f.format != "cmon") continue;
    CAPTURE(f.id);
    CHECK(pins(run_fixture(f, f.pinning_radius)));
    if (f.pinning_radius > 1) CHECK_FALSE(pins(run_fixture(f, f.pinning_radius - 1)));
  }
}

TEST_CASE("harness: every fixture fact pins at default radii") {
  for (const auto& f : fixture_catalog()) {
    CAPTURE(f.id);
    const auto r = run_fixture(f);
    CHECK(all_facts_pass(r));
    CHECK(r["audit"]["rejected"] == 0);
    for (const auto& a : r["assertions"]) CHECK_MESSAGE(a["status"] != "fail", a.dump());
  }
}

TEST_CASE("harness: suite runs are deterministic") {
  SuiteOptions so;
  so.law_samples = 20;
  const auto a = paper_suite(so);
  const auto b = paper_suite(so);
  CHECK(a.results.dump() == b.results.dump());
  CHECK(a.passed());
  so.threads = 3;
  CHECK(paper_suite(so).results.dump() == a.results.dump());
}

TEST_CASE("harness: stable rank set of the unit-tail monoid") {
  const auto& f = find_fixture("F4_5");
  const auto m = testutil::load(f.text);
  Analyzer an(m.rs);
  const auto s = sr_set(an, f.sr_set_degree);
  CHECK(s.complete());
  CHECK(s.values == std::vector<std::size_t>{1, 2, 3, 5});
  const auto units = unit_group(an);
  REQUIRE(units);
  CHECK(units->size() == 2);
}

TEST_CASE("harness: random finite monoids are valid and bounded") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_finite_monoid(rng, 8);
    CHECK(m.size() >= 1);
    CHECK(m.size() <= 8);
  }
}
