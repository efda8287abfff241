#include <doctest.h>

#include "srank/rank.hpp"
#include "srank/report.hpp"
#include "srank/verify.hpp"
#include "util.hpp"

using namespace srank;

TEST_CASE("verify: tampered certificates are rejected") {
  const auto m = testutil::load(testutil::kTwoRel5);
  const auto c = certify_sr_lower(m.rs, m("a"), 4, 40);
  REQUIRE(c);
  CHECK(verify_certificate(m.rs, *c).ok);

  auto wrong_n = *c;
  wrong_n.params["n"] += 1;
  CHECK_FALSE(verify_certificate(m.rs, wrong_n).ok);

  auto wrong_elem = *c;
  wrong_elem.elements.begin()->second[1] += 1;
  CHECK_FALSE(verify_certificate(m.rs, wrong_elem).ok);

  auto wrong_property = *c;
  wrong_property.property = "sr_infinite";
  CHECK_FALSE(verify_certificate(m.rs, wrong_property).ok);
}

TEST_CASE("verify: certificates survive a JSON round trip") {
  const auto m = testutil::load(testutil::kFourNine);
  const auto s = sr_bracket(m.rs, m("a"));
  const auto sp = sr_plus_bracket(m.rs, m("a"));
  std::size_t n = 0;
  for (const auto* b : {&s, &sp})
    for (const auto& c : b->chain) {
      const auto back = certificate_from_json(to_json(c, m.p.generators));
      CHECK(verify_certificate(m.rs, back).ok);
      ++n;
    }
  CHECK(n > 0);
}

TEST_CASE("verify: a refutation with an invalid hom is rejected") {
  const auto m = testutil::load(testutil::kAbsorb);
  auto c = certify_sr_lower(m.rs, m("a"), 1, 8);
  REQUIRE(c);
  REQUIRE(c->hom);
  // a -> 0 and b -> nonzero breaks a + b = a in any target.
  c->hom->assignment[0] = c->hom->target.zero();
  c->hom->assignment[1] = c->hom->target.zero() == 0 ? 1 : 0;
  CHECK_FALSE(verify_certificate(m.rs, *c).ok);
}

TEST_CASE("verify: an unsound rewrite system accepts nothing") {
  const auto p = parse_presentation("gens a b c; rel 2 a + b = 3 c; rel a + 2 c = 2 b; rel 3 b = a + c;");
  const auto partial = complete(p, 1);
  REQUIRE_FALSE(partial.confluent());
  Certificate c;
  c.kind = CertificateKind::Counterexample;
  c.property = "not_conical";
  CHECK_FALSE(Verifier(partial).check(c).ok);
}
