#include <doctest.h>

#include <algorithm>

#include "srank/rank.hpp"
#include "srank/verify.hpp"
#include "util.hpp"

using namespace srank;

namespace {

void require_verified(const testutil::Loaded& m, const Certificate& c) {
  const auto r = verify_certificate(m.rs, c);
  CHECK_MESSAGE(r.ok, r.reason);
}

}  // namespace

TEST_CASE("rank: refuted condition below the stable rank") {
  const auto m = testutil::load(testutil::kTwoRel3);
  const auto v = sr_condition_window(m.rs, m("a"), 2, 12, 24);
  REQUIRE(v.fails());
  REQUIRE(v.certificate);
  require_verified(m, *v.certificate);
}

TEST_CASE("rank: condition that holds stays unknown without a positive grading") {
  const auto m = testutil::load(testutil::kAbsorb);
  const auto v = sr_condition_window(m.rs, m("a"), 2, 6, 12);
  CHECK(v.unknown());
  CHECK(v.radius == 6);
}

TEST_CASE("rank: the zero element satisfies the first condition") {
  for (const char* text : {testutil::kTwoRel3, testutil::kAbsorb, testutil::kThreeA}) {
    const auto m = testutil::load(text);
    CHECK_FALSE(sr_condition_window(m.rs, m("0"), 1, 6, 12).fails());
  }
  const auto finite = testutil::load(testutil::kThreeA);
  CHECK(sr_condition_window(finite.rs, finite("0"), 1, 6, 12).holds());
}

TEST_CASE("rank: lower-bound certificates") {
  for (int n : {3, 5}) {
    const auto m = testutil::load(n == 3 ? testutil::kTwoRel3 : testutil::kTwoRel5);
    const auto c = certify_sr_lower(m.rs, m("a"), n - 1, 4 * (2 * n));
    REQUIRE(c);
    CHECK(c->property == "sr_lower");
    CHECK(c->kind == CertificateKind::W12);
    require_verified(m, *c);
  }
  const auto absorb = testutil::load(testutil::kAbsorb);
  const auto c = certify_sr_lower(absorb.rs, absorb("a"), 1, 8);
  REQUIRE(c);
  require_verified(absorb, *c);

  const auto free = testutil::load("gens a b;");
  CHECK_FALSE(certify_sr_lower(free.rs, free("a"), 1, 8));
}

TEST_CASE("rank: infinity certificates") {
  const auto inf = testutil::load(testutil::kInfinity);
  const auto w = certify_sr_infinite(inf.rs, inf("w"), 4, 8);
  REQUIRE(w);
  CHECK(w->kind == CertificateKind::PurelyInf);
  require_verified(inf, *w);

  const auto three = testutil::load(testutil::kThreeA);
  const auto a = certify_sr_infinite(three.rs, three("a"), 4, 8);
  REQUIRE(a);
  require_verified(three, *a);

  const auto two = testutil::load(testutil::kTwoRel3);
  CHECK_FALSE(certify_sr_infinite(two.rs, two("a"), 8, 16));
}

TEST_CASE("rank: brackets pin on the reference presentations") {
  const auto five = testutil::load(testutil::kTwoRel5);
  const auto b5 = sr_bracket(five.rs, five("a"));
  CHECK(b5.pinned());
  CHECK(b5.certified_lo == 5);

  const auto absorb = testutil::load(testutil::kAbsorb);
  const auto ba = sr_bracket(absorb.rs, absorb("a"));
  CHECK(ba.pinned());
  CHECK(ba.certified_lo == 2);

  const auto four = testutil::load(testutil::kFourNine);
  const auto b2 = sr_bracket(four.rs, four("2a"));
  CHECK(b2.pinned());
  CHECK(b2.certified_lo == 2);

  const auto inf = testutil::load(testutil::kInfinity);
  const auto bw = sr_bracket(inf.rs, inf("w"));
  CHECK(bw.pinned());
  CHECK_FALSE(bw.value());
  for (const auto& c : b5.chain) require_verified(five, c);
}

TEST_CASE("rank: strong stable rank brackets") {
  const auto four = testutil::load(testutil::kFourNine);
  const auto sp = sr_plus_bracket(four.rs, four("a"));
  CHECK(sp.pinned());
  CHECK(sp.certified_lo == 5);
  const auto s = sr_bracket(four.rs, four("a"));
  REQUIRE(s.pinned());
  CHECK(s.certified_lo <= sp.certified_lo);
  CHECK(sp.certified_lo <= s.certified_lo + 1);

  const auto free = testutil::load("gens a b;");
  const auto f = sr_plus_bracket(free.rs, free("a"));
  CHECK(f.pinned());
  CHECK(f.certified_lo == 1);
}

TEST_CASE("rank: (k,l) profile") {
  const auto five = testutil::load(testutil::kTwoRel5);
  const auto prof = srkl_profile(five.rs, five("a"), 6);
  REQUIRE(prof.sr.pinned());
  const auto n = prof.sr.certified_lo;
  for (std::size_t k = 1; k <= prof.kmax; ++k) {
    const auto& v = prof.verdicts[k - 1][0];
    if (k < n) CHECK(v.fails());
    if (k >= n) CHECK_FALSE(v.fails());
  }
  REQUIRE(prof.m_hi);
  CHECK(*prof.m_hi <= n - 1);

  RankOptions ref;
  ref.refinement_declared = true;
  const auto absorb = testutil::load(testutil::kAbsorb);
  const auto pa = srkl_profile(absorb.rs, absorb("a"), 3, ref);
  REQUIRE(pa.m_hi);
  CHECK(pa.m_lo == 1);
  CHECK(*pa.m_hi == 1);
}

TEST_CASE("rank: element predicates") {
  const auto two = testutil::load(testutil::kTwoRel3);
  const auto p = element_predicates(two.rs, two("2a"), 10);
  REQUIRE(p.self_cancellative.fails());
  REQUIRE(p.self_cancellative.certificate);
  require_verified(two, *p.self_cancellative.certificate);

  const auto three = testutil::load(testutil::kThreeA);
  const auto q = element_predicates(three.rs, three("a"), 6);
  CHECK(q.hermite.fails());
  CHECK(q.self_cancellative.holds());

  CHECK(element_predicates(two.rs, two("0"), 6).self_cancellative.holds());
}

TEST_CASE("rank: window property reports") {
  const auto four = testutil::load(testutil::kFourNine);
  const auto r = window_property_report(four.rs, 8, 16);
  REQUIRE(r.separative.fails());
  require_verified(four, *r.separative.certificate);

  const auto tail = testutil::load("gens a b; rel 5 a + b = 5 a; rel 2 b = 0;");
  const auto t = window_property_report(tail.rs, 8, 16);
  const std::vector<ExponentVector> units{tail("0"), tail("b")};
  CHECK(std::find(t.components.begin(), t.components.end(), units) != t.components.end());

  const auto free = testutil::load("gens a b;");
  const auto f = window_property_report(free.rs, 4, 8);
  for (const auto* v : {&f.conical, &f.stably_finite, &f.separative, &f.strongly_separative, &f.refinement})
    CHECK_FALSE(v->fails());
}

TEST_CASE("rank: refinement mode requires a declaration") {
  const auto absorb = testutil::load(testutil::kAbsorb);
  CHECK_THROWS_AS(sr_condition_window(absorb.rs, absorb("a"), 2, 4, 8, {}, true), RefinementNotDeclared);
}
