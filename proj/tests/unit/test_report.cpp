#include <doctest.h>

#include "srank/commands.hpp"
#include "srank/report.hpp"
#include "util.hpp"

using namespace srank;

TEST_CASE("report: FNV-1a reference vectors") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("report: envelope fields") {
  const auto r = make_report("nf", "gens a;", {{"expr", "a"}}, {{"normal_form", "a"}}, 1.5);
  CHECK(r["version"] == kToolVersion);
  CHECK(r["schema_version"] == kReportSchemaVersion);
  CHECK(r["input_digest"] == "fnv1a64:" + fnv1a_hex("gens a;"));
  CHECK(r["timing"]["elapsed_ms"] == 1.5);
}

TEST_CASE("report: identical invocations give identical results") {
  const std::string text = testutil::read_source("fixtures/F5.cmon");
  const auto a = cmd_sr(text, "a", {}).dump();
  const auto b = cmd_sr(text, "a", {}).dump();
  CHECK(a == b);
  CHECK(cmd_props(text, 0, 0).dump() == cmd_props(text, 0, 0).dump());
}

TEST_CASE("report: certificates in results are collected and re-verifiable") {
  const std::string text = testutil::read_source("fixtures/F2_5.cmon");
  const auto r = cmd_sr(text, "a", {});
  CHECK(r["sr"]["value"] == 5);
  const auto certs = collect_certificates(r);
  CHECK(certs.size() == r["verification"]["checked"].get<std::size_t>());
  CHECK(r["verification"]["rejected"] == 0);
  for (const auto& c : certs) CHECK(cmd_verify(text, c)["ok"] == true);
}

TEST_CASE("report: finite monoid JSON round trip") {
  const auto m = validate(parse_cayley(testutil::kThreeATable));
  const auto back = finite_from_json(to_json(m));
  CHECK(back.labels() == m.labels());
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) CHECK(back.add(x, y) == m.add(x, y));
}

TEST_CASE("commands: equality and quotients") {
  const std::string f23 = testutil::read_source("fixtures/F2_3.cmon");
  CHECK(cmd_eq(f23, "5a", "a+2b")["equal"] == true);
  CHECK(cmd_eq(f23, "b", "2a")["equal"] == false);
  const std::string f6 = testutil::read_source("fixtures/F6.ctab");
  const auto q = cmd_quotient(f6, {"power-some", "", {2}, {}});
  CHECK(q["quotient"]["elements"].size() == 2);
  CHECK_THROWS_AS(cmd_quotient(f6, {"bogus", "", {}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_nf(f6, "a"), std::invalid_argument);
  CHECK(cmd_sr(f6, "a", {})["sr"] == "inf");
}
