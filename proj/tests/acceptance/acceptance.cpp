// Acceptance checks: one PASS/FAIL line per criterion. Every comparison is
// exact; the pinned tolerances below are all zero.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../oracle/oracle.hpp"
#include "srank/finite.hpp"
#include "srank/harness.hpp"
#include "srank/report.hpp"
#include "srank/rewrite.hpp"
#include "srank/verify.hpp"

using namespace srank;

namespace {

constexpr std::size_t kRankTolerance = 0;
constexpr std::size_t kAllowedDisagreements = 0;
constexpr std::size_t kAllowedRejections = 0;
constexpr std::size_t kLawMonoids = 500;
constexpr std::size_t kLawMaxSize = 8;
constexpr std::size_t kOraclePresentations = 1000;
constexpr Coeff kOraclePairDegree = 6;
constexpr std::size_t kQuotientMonoids = 200;
constexpr double kSuiteSeconds = 120.0;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  (" << detail << ")\n";
  failures += !ok;
}

std::optional<std::size_t> rank_of(const Json& v) {
  if (v.is_string()) return std::nullopt;
  return v.get<std::size_t>();
}

constexpr std::size_t kInf = static_cast<std::size_t>(-1);

// Exact ranks of Cayley-table fixtures are strings: a number or "inf".
std::size_t exact_rank(const Json& v) {
  const auto s = v.get<std::string>();
  return s == "inf" ? kInf : std::stoul(s);
}

std::string show(const std::optional<std::size_t>& r) { return r ? std::to_string(*r) : "inf"; }

const Json* fixture_json(const Json& suite, const std::string& id) {
  for (const auto& f : suite["fixtures"])
    if (f["id"] == id) return &f;
  return nullptr;
}

// ---------------------------------------------------------------------------

struct Expected {
  std::string fixture, claim, subject, expected;
};

void criterion1(const Json& suite) {
  const std::vector<Expected> want = {
      {"F1", "sr", "g", "1"},           {"F1", "sr", "w", "inf"},
      {"F2_3", "sr", "a", "3"},         {"F2_3", "sr", "b", "2"},
      {"F2_5", "sr", "a", "5"},         {"F2_5", "sr", "2a", "3"},
      {"F2_5", "sr", "4a", "2"},        {"F2_5", "sr_set", "", "{2,3,5}"},
      {"F2_7", "sr_set", "", "{2,3,4,7}"},
      {"F3", "sr", "a", "2"},           {"F3", "sr", "2a", "2"},
      {"F3", "sr", "3a", "2"},          {"F3", "sr", "4a", "2"},
      {"F3", "sr", "b", "1"},           {"F3", "sr", "2b", "1"},
      {"F3", "sr", "3b", "1"},          {"F3", "sr", "4b", "1"},
      {"F4_5", "sr", "a", "5"},         {"F4_5", "sr", "5a", "1"},
      {"F4_5", "sr_set", "", "{1,2,3,5}"},
      {"F5", "sr", "a", "4"},           {"F5", "sr", "2a", "2"},
      {"F5", "sr_plus", "a", "5"},      {"F5", "separative", "", "fails"},
      {"F6", "sr", "a", "inf"},         {"F6", "self_cancellative", "a", "holds"},
      {"F6", "hermite", "a", "fails"},  {"F6", "separative", "", "holds"},
      {"F6", "refinement", "", "holds"},
      {"F7", "sr", "g", "1"},           {"F7", "units", "", "{0,u}"},
      {"F7", "conical", "", "fails"},
  };
  std::size_t ok = 0;
  std::ostringstream bad;
  for (const auto& e : want) {
    const Json* f = fixture_json(suite, e.fixture);
    bool found = false;
    if (f)
      for (const auto& fact : (*f)["facts"])
        if (fact["claim"] == e.claim && fact["subject"] == e.subject && fact["expected"] == e.expected) {
          found = fact["status"] == "pass";
          if (!found) bad << " " << e.fixture << ":" << e.claim << "(" << e.subject << ")=" << fact["observed"];
        }
    ok += found;
    if (!found && !f) bad << " " << e.fixture << " missing";
  }
  // Certified separativity failure on F5 and certified infinity on F1.
  bool certified = true;
  for (const auto& fact : (*fixture_json(suite, "F5"))["facts"])
    if (fact["claim"] == "separative") certified &= fact["detail"] == "certificate";
  for (const auto& b : (*fixture_json(suite, "F1"))["brackets"])
    if (b["element"] == "w") certified &= !b["sr"]["infinite"].is_null();
  report(1, "fixture pinning", ok == want.size() && certified,
         std::to_string(ok) + "/" + std::to_string(want.size()) + " facts pinned exactly" +
             (certified ? "" : ", certificate basis missing") + bad.str());
}

// ---------------------------------------------------------------------------

struct PinnedRow {
  std::size_t l;
  std::optional<std::size_t> sr;
};

std::vector<PinnedRow> pinned_rows(const Json& fixture) {
  std::vector<PinnedRow> out;
  for (const auto& r : fixture["multiples"]["rows"])
    if (r["sr"]["pinned"].get<bool>()) out.push_back({r["l"].get<std::size_t>(), rank_of(r["sr"]["value"])});
  return out;
}

std::optional<std::size_t> pinned_at(const std::vector<PinnedRow>& rows, std::size_t l, bool& present) {
  for (const auto& r : rows)
    if (r.l == l) {
      present = true;
      return r.sr;
    }
  present = false;
  return std::nullopt;
}

void criterion2(const Json& suite) {
  std::size_t checked = 0, violations = 0;
  std::ostringstream detail;
  for (const char* id : {"F2_3", "F2_5", "F2_7", "F5"}) {
    const auto rows = pinned_rows(*fixture_json(suite, id));
    bool have_a = false;
    const auto n = pinned_at(rows, 1, have_a);
    if (!have_a || !n) {
      ++violations;
      detail << " " << id << ": sr(a) not pinned";
      continue;
    }
    for (const auto& r : rows) {
      if (!r.sr) {
        ++violations;
        continue;
      }
      const std::size_t lo = 1 + (*n - 1) / r.l, hi = 1 + (*n - 1 + r.l - 1) / r.l;
      ++checked;
      if (*r.sr + kRankTolerance < lo || *r.sr > hi + kRankTolerance) {
        ++violations;
        detail << " " << id << ": sr(" << r.l << "a)=" << *r.sr;
      }
    }
  }
  // Refinement equality on F3 with sr(a) = 2.
  {
    const auto rows = pinned_rows(*fixture_json(suite, "F3"));
    for (std::size_t l = 1; l <= 4; ++l) {
      bool present = false;
      const auto v = pinned_at(rows, l, present);
      ++checked;
      if (!present || v != std::optional<std::size_t>(1 + (2 - 1 + l - 1) / l)) {
        ++violations;
        detail << " F3: sr(" << l << "a)=" << (present ? show(v) : "unpinned");
      }
    }
  }
  // Divisibility on F2(5): l | n - 1 gives sr(la) = 1 + (n - 1) / l.
  {
    const auto rows = pinned_rows(*fixture_json(suite, "F2_5"));
    for (std::size_t l : {2, 4}) {
      bool present = false;
      const auto v = pinned_at(rows, l, present);
      ++checked;
      if (!present || v != std::optional<std::size_t>(1 + 4 / l)) {
        ++violations;
        detail << " F2_5: sr(" << l << "a)=" << (present ? show(v) : "unpinned");
      }
    }
  }
  // Interval on F5 with p = sr(2a), l = 2.
  {
    const auto rows = pinned_rows(*fixture_json(suite, "F5"));
    bool pa = false, p2 = false;
    const auto sa = pinned_at(rows, 1, pa), s2 = pinned_at(rows, 2, p2);
    ++checked;
    const std::size_t l = 2;
    if (!pa || !p2 || !sa || !s2 || *sa + 2 * l < l * *s2 + 2 || *sa > l * *s2) {
      ++violations;
      detail << " F5 interval: sr(a)=" << show(sa) << " p=" << show(s2);
    } else {
      detail << " F5: " << l * *s2 + 2 - 2 * l << " <= " << *sa << " <= " << l * *s2 << ";";
    }
  }
  report(2, "formula checks on pinned pairs", violations == 0,
         std::to_string(checked) + " checks, " + std::to_string(violations) + " violations;" + detail.str());
}

// ---------------------------------------------------------------------------

bool is_hom_onto(const FiniteMonoid& m, const Quotient& q) {
  std::vector<bool> hit(q.monoid.size(), false);
  for (Elem x = 0; x < m.size(); ++x) {
    hit[q.projection[x]] = true;
    for (Elem y = 0; y < m.size(); ++y)
      if (q.projection[m.add(x, y)] != q.monoid.add(q.projection[x], q.projection[y])) return false;
  }
  if (q.projection[m.zero()] != q.monoid.zero()) return false;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

void criterion3() {
  std::mt19937_64 rng(20240611);
  std::size_t law_checks = 0, violations = 0, quotients = 0, rank_pairs = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (first.empty()) first = what;
    ++violations;
  };
  for (std::size_t i = 0; i < kLawMonoids; ++i) {
    const auto m = random_finite_monoid(rng, kLawMaxSize);
    for (const auto& law : finite_laws(m)) {
      ++law_checks;
      if (!law.holds) fail(law.law + ": " + law.detail);
    }
    const auto props = property_report(m);
    if (!props.separativity_characterizations_agree()) fail("separativity characterizations disagree");
    if (!props.strong_separativity_characterizations_agree()) fail("strong separativity characterizations disagree");
    for (Elem a = 0; a < m.size(); ++a) {
      const auto r = oracle::sr(m, a);
      const bool unit = oracle::is_unit(m, a);
      if (unit ? r != std::optional<std::size_t>(1) : r.has_value()) fail("sr dichotomy at " + m.label(a));
      if (sr_exact_finite(m, a).value != r) fail("library sr differs from definition at " + m.label(a));
    }
    // Every o-ideal quotient, ranks compared through the definition.
    for (Elem x = 0; x < m.size(); ++x) {
      const auto mask = o_ideal_of(m, x);
      QuotientParams qp;
      for (Elem y = 0; y < m.size(); ++y)
        if (mask[y]) qp.ideal.push_back(y);
      const auto q = quotient(m, QuotientKind::OIdeal, qp);
      ++quotients;
      if (!is_hom_onto(m, q) || !q.kernel_matches_relation || !q.relation_idempotent) fail("o-ideal quotient");
      for (Elem a = 0; a < m.size(); ++a) {
        const auto before = oracle::sr(m, a), after = oracle::sr(q.monoid, q.projection[a]);
        ++rank_pairs;
        if (before && (!after || *after > *before)) fail("o-ideal quotient raised sr at " + m.label(a));
      }
    }
    std::vector<std::pair<QuotientKind, QuotientParams>> others = {
        {QuotientKind::MaxAntisymmetric, {}},
        {QuotientKind::PowerSome, {{}, {2}}},
        {QuotientKind::PowerSome, {{}, {3}}},
        {QuotientKind::PowerAll, {{}, {2, 3}}},
    };
    for (const auto& [kind, params] : others) {
      const auto q = quotient(m, kind, params);
      ++quotients;
      if (!is_hom_onto(m, q) || !q.kernel_matches_relation) fail("quotient validity");
    }
  }
  report(3, "finite-monoid laws", violations == 0,
         std::to_string(kLawMonoids) + " monoids, " + std::to_string(law_checks) + " law checks, " +
             std::to_string(quotients) + " quotients, " + std::to_string(rank_pairs) + " rank pairs, " +
             std::to_string(violations) + " violations" + (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------------------

MonoidPresentation random_presentation(std::mt19937_64& rng) {
  static const char* names[] = {"a", "b", "c"};
  MonoidPresentation p;
  const std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) p.generators.push_back(names[i]);
  const std::size_t rels = 1 + rng() % 4;
  for (std::size_t r = 0; r < rels; ++r) {
    ExponentVector u(k), v(k);
    for (auto* w : {&u, &v}) {
      const Coeff deg = static_cast<Coeff>(rng() % 5);
      for (Coeff d = 0; d < deg; ++d) (*w)[rng() % k] += 1;
    }
    if (u != v) p.relations.push_back({u, v});
  }
  return p;
}

std::vector<ExponentVector> vectors_up_to(std::size_t k, Coeff d) {
  std::vector<ExponentVector> out;
  ExponentVector v(k);
  auto rec = [&](auto&& self, std::size_t i, Coeff left) -> void {
    if (i == k) {
      out.push_back(v);
      return;
    }
    for (Coeff c = 0; c <= left; ++c) {
      v[i] = c;
      self(self, i + 1, left - c);
    }
    v[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

void criterion4() {
  std::mt19937_64 rng(4);
  std::size_t pairs = 0, conclusive = 0, disagreements = 0, skipped = 0;
  std::string first;
  const oracle::BfsLimits lim{12, 14, 4000};
  for (std::size_t t = 0; t < kOraclePresentations; ++t) {
    const auto p = random_presentation(rng);
    const auto rs = complete(p, 20000);
    if (!rs.confluent()) {
      ++skipped;
      continue;
    }
    const auto vs = vectors_up_to(p.rank(), kOraclePairDegree);
    std::vector<ExponentVector> nfs;
    nfs.reserve(vs.size());
    for (const auto& v : vs) nfs.push_back(rs.normal_form(v));
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto cls = oracle::bfs_class(p, vs[i], lim);
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        ++pairs;
        const auto ans = oracle::judge(cls, vs[j]);
        if (ans == oracle::Answer::Inconclusive) continue;
        ++conclusive;
        if ((ans == oracle::Answer::Equal) != (nfs[i] == nfs[j])) {
          ++disagreements;
          if (first.empty())
            first = format_presentation(p) + " on " + format_element(vs[i], p.generators) + " vs " +
                    format_element(vs[j], p.generators);
        }
      }
    }
  }
  report(4, "oracle equivalence", disagreements <= kAllowedDisagreements && skipped == 0,
         std::to_string(kOraclePresentations) + " presentations, " + std::to_string(pairs) + " pairs, " +
             std::to_string(conclusive) + " conclusive, " + std::to_string(disagreements) + " disagreements, " +
             std::to_string(skipped) + " without completion" + (first.empty() ? "" : "; first: " + first));
}

// ---------------------------------------------------------------------------

void criterion5(const SuiteResult& r) {
  // Re-collect every certificate from the serialized report and check it
  // against a freshly completed system, independently of the suite's audit.
  std::size_t checked = 0, rejected = 0;
  for (const auto& f : r.results["fixtures"]) {
    if (f["format"] != "cmon") continue;
    const auto rs = complete(parse_presentation(find_fixture(f["id"].get<std::string>()).text));
    const Verifier verifier(rs);
    for (const auto& c : collect_certificates(f)) {
      ++checked;
      rejected += !verifier.check(certificate_from_json(c));
    }
  }
  const bool ok = rejected <= kAllowedRejections && r.certificates_rejected == 0 && checked == r.certificates &&
                  checked > 0;
  report(5, "certificate audit", ok,
         std::to_string(checked) + " re-checked from JSON, " + std::to_string(rejected) + " rejected; suite audit " +
             std::to_string(r.certificates) + " checked, " + std::to_string(r.certificates_rejected) + " rejected");
}

// ---------------------------------------------------------------------------

void criterion6(const Json& suite) {
  std::size_t pairs = 0, violations = 0;
  std::ostringstream bad;
  auto check = [&](const std::string& where, const Json& s, const Json& sp) {
    if (!s["pinned"].get<bool>() || !sp["pinned"].get<bool>()) return;
    ++pairs;
    const auto a = rank_of(s["value"]), b = rank_of(sp["value"]);
    const bool ok = a ? (b && *a <= *b && *b <= *a + 1) : !b;
    if (!ok) {
      ++violations;
      bad << " " << where << ": sr=" << show(a) << " sr+=" << show(b);
    }
  };
  for (const auto& f : suite["fixtures"]) {
    const std::string id = f["id"].get<std::string>();
    if (f["format"] == "ctab") {
      for (const auto& b : f["brackets"]) {
        ++pairs;
        const auto a = exact_rank(b["sr"]), c = exact_rank(b["sr_plus"]);
        const bool ok = a == kInf ? c == kInf : (c != kInf && a <= c && c <= a + 1);
        if (!ok) {
          ++violations;
          bad << " " << id << ":" << b["element"].get<std::string>();
        }
      }
      continue;
    }
    for (const auto& b : f["brackets"]) check(id + ":" + b["element"].get<std::string>(), b["sr"], b["sr_plus"]);
    for (const auto& r : f["multiples"]["rows"]) check(id + ":" + r["element"].get<std::string>(), r["sr"], r["sr_plus"]);
  }
  report(6, "strong/weak rank consistency", violations == 0 && pairs > 0,
         std::to_string(pairs) + " pinned pairs, " + std::to_string(violations) + " violations" + bad.str());
}

// ---------------------------------------------------------------------------

bool conical(const FiniteMonoid& m) {
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (m.add(x, y) == m.zero() && (x != m.zero() || y != m.zero())) return false;
  return true;
}

void criterion7() {
  std::mt19937_64 rng(7);
  std::size_t sf_ref = 0, conical_count = 0, power_quotients = 0, violations = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (first.empty()) first = what;
    ++violations;
  };
  for (std::size_t i = 0; i < kQuotientMonoids; ++i) {
    const auto m = random_finite_monoid(rng, kLawMaxSize);
    const auto pr = property_report(m);
    if (pr.stably_finite.value && pr.refinement.value) {
      ++sf_ref;
      const auto q = quotient(m, QuotientKind::MaxAntisymmetric, {});
      const auto qr = property_report(q.monoid);
      if (!qr.stably_finite.value || !qr.refinement.value) fail("quotient lost stable finiteness or refinement");
      for (Elem a = 0; a < m.size(); ++a)
        if (oracle::sr(m, a) != oracle::sr(q.monoid, q.projection[a])) fail("sr changed at " + m.label(a));
    }
    if (conical(m)) {
      ++conical_count;
      for (const auto& [kind, params] : std::vector<std::pair<QuotientKind, QuotientParams>>{
               {QuotientKind::PowerSome, {{}, {2}}},
               {QuotientKind::PowerSome, {{}, {3}}},
               {QuotientKind::PowerSome, {{}, {2, 3}}},
               {QuotientKind::PowerAll, {{}, {2}}},
               {QuotientKind::PowerAll, {{}, {2, 3}}}}) {
        ++power_quotients;
        if (!conical(quotient(m, kind, params).monoid)) fail("power quotient of a conical monoid is not conical");
      }
    }
  }
  // Stably finite finite monoids are groups, so the first branch only ever
  // sees groups; report how many instances each branch exercised.
  report(7, "quotient propositions", violations == 0 && sf_ref > 0 && conical_count > 0,
         std::to_string(kQuotientMonoids) + " monoids, " + std::to_string(sf_ref) +
             " stably finite with refinement, " + std::to_string(conical_count) + " conical, " +
             std::to_string(power_quotients) + " power quotients, " + std::to_string(violations) + " violations" +
             (first.empty() ? "" : "; first: " + first));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  SuiteOptions so;
  SuiteResult suite;
  try {
    suite = paper_suite(so);
  } catch (const SuiteContradiction& e) {
    std::cout << "FAIL  suite aborted: " << e.what() << "\n" << e.dump().dump(2) << "\n";
    return 1;
  }
  const double suite_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  criterion1(suite.results);
  criterion2(suite.results);
  criterion3();
  criterion4();
  criterion5(suite);
  criterion6(suite.results);
  criterion7();

  std::printf("INFO  full suite at default radii took %.2f s (budget %.0f s): %s\n", suite_seconds, kSuiteSeconds,
              suite_seconds <= kSuiteSeconds ? "within budget" : "over budget");
  std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << 7 - failures << "/7)\n";
  return failures ? 1 : 0;
}
