#include "srank/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "srank/verify.hpp"

namespace srank {

namespace {

Fact fact(std::string claim, std::string subject, std::string expected, std::string anchor) {
  return {std::move(claim), std::move(subject), std::move(expected), std::move(anchor)};
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> c;

  {
    Fixture f;
    f.id = "F1";
    f.title = "naturals with an absorbing infinity";
    f.format = "cmon";
    f.text = "# N with an adjoined absorbing element w\ngens g w;\nrel g + w = w;\nrel 2 w = w;\n";
    f.pinning_radius = 1;
    f.multiples_of = "g";
    f.lmax = 3;
    f.probes = {"g", "w", "2g", "g + w"};
    f.facts = {fact("sr", "g", "1", "nat-infinity.sr-generator-one"),
               fact("sr", "w", "inf", "nat-infinity.sr-infinity-infinite")};
    c.push_back(std::move(f));
  }
  auto f2 = [&](unsigned n, std::uint64_t pinning_radius, std::vector<Fact> facts) {
    Fixture f;
    f.id = "F2_" + std::to_string(n);
    f.title = "na = a + b, 2(n-1)a = 2b with n = " + std::to_string(n);
    f.format = "cmon";
    f.text = "gens a b;\nrel " + std::to_string(n) + " a = a + b;\nrel " +
             std::to_string(2 * (n - 1)) + " a = 2 b;\n";
    f.pinning_radius = pinning_radius;
    f.multiples_of = "a";
    f.lmax = n + 1;
    f.sr_set_degree = n + 1;
    f.probes = {"a", "b", "a + b", "2a"};
    f.facts = std::move(facts);
    c.push_back(std::move(f));
  };
  f2(3, 1,
     {fact("sr", "a", "3", "two-relation.sr-a-equals-n"),
      fact("sr", "b", "2", "two-relation.sr-b-two"),
      fact("self_cancellative", "2a", "fails", "two-relation.n-1-multiple-not-self-cancellative")});
  f2(5, 3,
     {fact("sr", "a", "5", "two-relation.sr-a-equals-n"),
      fact("sr", "2a", "3", "two-relation.sr-2a"),
      fact("sr", "4a", "2", "two-relation.sr-4a"),
      fact("sr_set", "", "{2,3,5}", "two-relation.sr-set-nonzero-n5"),
      fact("self_cancellative", "4a", "fails", "two-relation.n-1-multiple-not-self-cancellative")});
  f2(7, 5,
     {fact("sr", "a", "7", "two-relation.sr-a-equals-n"),
      fact("sr_set", "", "{2,3,4,7}", "two-relation.sr-set-nonunit-n7"),
      fact("self_cancellative", "6a", "fails", "two-relation.n-1-multiple-not-self-cancellative")});

  {
    Fixture f;
    f.id = "F3";
    f.title = "one relation a + b = a";
    f.format = "cmon";
    f.text = "gens a b;\nrel a + b = a;\n";
    f.pinning_radius = 1;
    f.refinement = true;
    f.separative = true;
    f.multiples_of = "a";
    f.lmax = 4;
    f.probes = {"a", "b", "2b", "3b", "4b", "a + b"};
    for (int l = 1; l <= 4; ++l)
      f.facts.push_back(fact("sr", l == 1 ? "a" : std::to_string(l) + "a", "2",
                             "one-relation.sr-multiples-of-a-two"));
    for (int l = 1; l <= 4; ++l)
      f.facts.push_back(fact("sr", l == 1 ? "b" : std::to_string(l) + "b", "1",
                             "one-relation.sr-multiples-of-b-one"));
    c.push_back(std::move(f));
  }
  {
    Fixture f;
    f.id = "F4_5";
    f.title = "unit tail na + b = na, 2b = 0 with n = 5";
    f.format = "cmon";
    f.text = "gens a b;\nrel 5 a + b = 5 a;\nrel 2 b = 0;\n";
    f.pinning_radius = 4;
    f.multiples_of = "a";
    f.lmax = 6;
    f.sr_set_degree = 7;
    f.probes = {"a", "b", "a + b", "5a"};
    for (int m = 1; m <= 5; ++m)
      f.unit_translations.push_back({m == 1 ? "a" : std::to_string(m) + "a", "b"});
    f.facts = {fact("sr", "a", "5", "unit-tail.sr-a-equals-n"),
               fact("sr", "5a", "1", "unit-tail.sr-na-one"),
               fact("sr_set", "", "{1,2,3,5}", "unit-tail.sr-set-nonunit-n5"),
               fact("units", "", "{0,b}", "unit-tail.unit-group")};
    c.push_back(std::move(f));
  }
  {
    Fixture f;
    f.id = "F5";
    f.title = "4a = 2a + b = 2b";
    f.format = "cmon";
    f.text = "gens a b;\nrel 4 a = 2 a + b;\nrel 2 a + b = 2 b;\n";
    f.pinning_radius = 2;
    f.multiples_of = "a";
    f.lmax = 4;
    f.probes = {"a", "2a", "b", "a + b"};
    f.facts = {fact("sr", "a", "4", "four-two.sr-a-four"),
               fact("sr", "2a", "2", "four-two.sr-2a-two"),
               fact("sr_plus", "a", "5", "four-two.strong-sr-a-five"),
               fact("separative", "", "fails", "four-two.not-separative")};
    c.push_back(std::move(f));
  }
  {
    Fixture f;
    f.id = "F6";
    f.title = "{0, a, 2a} with 3a = a";
    f.format = "ctab";
    f.text =
        "{\n  \"elements\": [\"0\", \"a\", \"2a\"],\n  \"zero\": \"0\",\n"
        "  \"table\": [[\"0\", \"a\", \"2a\"], [\"a\", \"2a\", \"a\"], [\"2a\", \"a\", \"2a\"]]\n}\n";
    f.separative = true;
    f.refinement = true;
    f.probes = {"a", "2a"};
    f.facts = {fact("sr", "a", "inf", "three-a.sr-infinite"),
               fact("self_cancellative", "a", "holds", "three-a.self-cancellative"),
               fact("hermite", "a", "fails", "three-a.not-hermite"),
               fact("separative", "", "holds", "three-a.separative"),
               fact("refinement", "", "holds", "three-a.refinement")};
    c.push_back(std::move(f));
  }
  {
    Fixture f;
    f.id = "F7";
    f.title = "group tail 2u = 0, u + g = g";
    f.format = "cmon";
    f.text = "gens u g;\nrel 2 u = 0;\nrel u + g = g;\n";
    f.pinning_radius = 1;
    f.multiples_of = "g";
    f.lmax = 3;
    f.probes = {"g", "u", "2g"};
    f.unit_translations = {{"g", "u"}, {"2g", "u"}};
    f.facts = {fact("sr", "g", "1", "group-tail.sr-one"),
               fact("units", "", "{0,u}", "group-tail.unit-group-order-two"),
               fact("conical", "", "fails", "group-tail.not-conical")};
    c.push_back(std::move(f));
  }
  return c;
}

using Rank = std::optional<std::size_t>;  // nullopt = infinity

bool rank_le(const Rank& a, const Rank& b) { return !b || (a && *a <= *b); }
std::string rank_text(const Rank& r) { return r ? std::to_string(*r) : "inf"; }

std::optional<Rank> pinned(const SrBracket& b) {
  if (!b.pinned()) return std::nullopt;
  return b.value();
}

Assertion make_assertion(std::string id, std::string statement) {
  return {std::move(id), std::move(statement), "skipped", {}};
}

/// Record one instance; any failure sticks.
void record(Assertion& a, bool ok, const std::string& what) {
  if (!ok) {
    a.status = "fail";
    a.detail += (a.detail.empty() ? "" : "; ") + what;
  } else if (a.status == "skipped") {
    a.status = "pass";
  }
}

void finish(Assertion& a, std::size_t checked) {
  if (a.status == "pass") a.detail = std::to_string(checked) + " instances";
  if (a.status == "skipped" && a.detail.empty()) a.detail = "no applicable instance with all sides pinned";
}

std::string set_text(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s + "}";
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture& find_fixture(const std::string& id) {
  for (const auto& f : fixture_catalog())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown fixture '" + id + "'");
}

Json to_json(const Assertion& a) {
  return {{"id", a.id}, {"statement", a.statement}, {"status", a.status}, {"detail", a.detail}};
}

std::optional<std::vector<ExponentVector>> unit_group(Analyzer& an) {
  const auto& rs = an.rs();
  std::vector<ExponentVector> units;
  if (an.finite()) {
    const auto& fd = *an.finite();
    for (Elem e : fd.monoid->units()) units.push_back(fd.elements[e]);
    std::sort(units.begin(), units.end(), DeglexLess{});
    return units;
  }
  if (!an.grading()) return std::nullopt;
  // Units have grade 0, so they lie in the submonoid of zero-weight generators.
  const auto& w = an.grading()->weights;
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (w[i] == 0) gens.push_back(rs.normal_form(rs.presentation().generator(i)));
  std::vector<ExponentVector> closure{ExponentVector(rs.rank())};
  std::deque<ExponentVector> queue{closure.front()};
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto s = rs.add(v, g);
      if (std::find(closure.begin(), closure.end(), s) != closure.end()) continue;
      if (closure.size() >= 4096) return std::nullopt;
      closure.push_back(s);
      queue.push_back(std::move(s));
    }
  }
  for (const auto& x : closure)
    for (const auto& y : closure)
      if (rs.add(x, y).is_zero()) {
        units.push_back(x);
        break;
      }
  std::sort(units.begin(), units.end(), DeglexLess{});
  return units;
}

std::string SrSet::format() const {
  std::vector<std::string> items;
  for (auto v : values) items.push_back(std::to_string(v));
  if (infinite) items.push_back("inf");
  return set_text(items);
}

SrSet sr_set(Analyzer& an, std::uint64_t degree) {
  SrSet out;
  out.degree = degree;
  const auto units = unit_group(an);
  std::set<std::size_t> values;
  for (const auto& x : an.window(degree).elements()) {
    if (x.is_zero()) continue;
    if (units) {
      if (std::find(units->begin(), units->end(), x) != units->end()) continue;
    } else if (!an.non_unit(x)) {
      out.unit_status_unknown.push_back(x);
      continue;
    }
    auto br = an.sr_bracket(x);
    if (auto v = pinned(br)) {
      if (*v)
        values.insert(**v);
      else
        out.infinite = true;
    } else {
      out.unpinned.push_back(x);
    }
    out.elements.emplace_back(x, std::move(br));
  }
  out.values.assign(values.begin(), values.end());
  return out;
}

MultiplesProfile multiples_profile(Analyzer& an, const ExponentVector& a_in, std::size_t lmax,
                                   std::uint64_t predicate_radius, bool refinement) {
  const auto& rs = an.rs();
  MultiplesProfile p;
  p.a = rs.normal_form(a_in);
  for (std::size_t l = 1; l <= lmax; ++l) {
    MultipleRow row;
    row.l = l;
    row.element = rs.times(static_cast<Coeff>(l), p.a);
    row.sr = an.sr_bracket(row.element);
    row.sr_plus = an.sr_plus_bracket(row.element);
    auto preds = an.element_predicates(row.element, predicate_radius);
    row.hermite = std::move(preds.hermite);
    row.self_cancellative = std::move(preds.self_cancellative);
    row.cancellative = std::move(preds.cancellative);
    p.rows.push_back(std::move(row));
  }
  if (p.rows.empty()) return p;

  const auto base = pinned(p.rows[0].sr);
  auto text = [&](std::size_t l) { return rs.format(p.rows[l - 1].element); };

  auto mono = make_assertion("monotonicity", "sr(ka) >= sr(la) for k <= l");
  auto mono_emp = make_assertion("monotonicity_empirical",
                                 "empirical_hi(la) <= empirical_hi(ka) at equal radii for k <= l");
  std::size_t n_mono = 0, n_emp = 0;
  for (const auto& rk : p.rows)
    for (const auto& rl : p.rows) {
      if (rk.l >= rl.l) continue;
      auto vk = pinned(rk.sr), vl = pinned(rl.sr);
      if (vk && vl) {
        ++n_mono;
        record(mono, rank_le(*vl, *vk), "sr(" + text(rk.l) + ") < sr(" + text(rl.l) + ")");
      }
      if (rk.sr.empirical_hi && rl.sr.empirical_hi &&
          rk.sr.empirical_hi->radius == rl.sr.empirical_hi->radius) {
        ++n_emp;
        record(mono_emp, rl.sr.empirical_hi->n <= rk.sr.empirical_hi->n,
               "empirical_hi(" + text(rl.l) + ") > empirical_hi(" + text(rk.l) + ")");
      }
    }
  finish(mono, n_mono);
  finish(mono_emp, n_emp);

  auto formula = make_assertion("bracket_formula",
                                "1 + floor((n-1)/l) <= sr(la) <= 1 + ceil((n-1)/l), n = sr(a)");
  auto divis = make_assertion("divisibility", "sr(la) = 1 + (n-1)/l when l divides n-1");
  auto refeq = make_assertion("refinement_equality", "sr(la) = 1 + ceil((n-1)/l) with refinement");
  auto interval = make_assertion("interval", "lp - 2l + 2 <= sr(a) <= lp for p = sr(la)");
  auto herm = make_assertion("hermitization", "ka has no certified Hermite failure for k >= sr(a)");
  auto chain = make_assertion("hermite_chain", "cancellative la has no certified Hermite failure");
  auto strong = make_assertion("strong_weak", "sr(la) <= sr+(la) <= sr(la) + 1");
  std::size_t n_formula = 0, n_div = 0, n_ref = 0, n_int = 0, n_herm = 0, n_chain = 0,
              n_strong = 0;

  for (const auto& row : p.rows) {
    const auto l = row.l;
    const auto v = pinned(row.sr);
    if (base && *base && v && *v) {
      const std::size_t n = **base, s = **v;
      const std::size_t lo = 1 + (n - 1) / l, hi = 1 + (n - 1 + l - 1) / l;
      ++n_formula;
      record(formula, lo <= s && s <= hi,
             "sr(" + text(l) + ") = " + std::to_string(s) + " outside [" + std::to_string(lo) +
                 ", " + std::to_string(hi) + "]");
      if ((n - 1) % l == 0) {
        ++n_div;
        record(divis, s == 1 + (n - 1) / l, "sr(" + text(l) + ") = " + std::to_string(s));
      }
      if (refinement) {
        ++n_ref;
        record(refeq, s == hi, "sr(" + text(l) + ") = " + std::to_string(s));
      }
    }
    if (base && v && *v) {
      const std::size_t pv = **v;
      ++n_int;
      const bool ok = *base && l * pv + 2 <= 2 * l + **base && **base <= l * pv &&
                      (!refinement || **base + l <= l * pv + 1);
      record(interval, ok, "l = " + std::to_string(l) + ", p = " + std::to_string(pv) +
                               ", sr(a) = " + rank_text(*base));
    }
    if (base && *base && l >= **base) {
      ++n_herm;
      record(herm, !row.hermite.fails(), text(l) + " has a certified Hermite failure");
    }
    if (row.cancellative.holds()) {
      ++n_chain;
      record(chain, !row.hermite.fails(), text(l));
    }
    const auto vp = pinned(row.sr_plus);
    if (v && vp) {
      ++n_strong;
      bool ok;
      if (!*v)
        ok = !*vp;
      else
        ok = *vp && **v <= **vp && **vp <= **v + 1;
      record(strong, ok, "sr(" + text(l) + ") = " + rank_text(*v) + ", sr+ = " + rank_text(*vp));
    }
  }
  finish(formula, n_formula);
  finish(divis, n_div);
  finish(interval, n_int);
  finish(herm, n_herm);
  finish(chain, n_chain);
  finish(strong, n_strong);
  p.assertions = {mono, mono_emp, formula, divis, interval, herm, chain, strong};
  if (refinement) {
    finish(refeq, n_ref);
    p.assertions.push_back(refeq);
  }
  return p;
}

Json to_json(const MultiplesProfile& p, const std::vector<std::string>& generators) {
  Json j;
  j["a"] = format_element(p.a, generators);
  j["rows"] = Json::array();
  for (const auto& r : p.rows)
    j["rows"].push_back({{"l", r.l},
                         {"element", format_element(r.element, generators)},
                         {"sr", to_json(r.sr, generators)},
                         {"sr_plus", to_json(r.sr_plus, generators)},
                         {"cancellative", to_json(r.cancellative, generators)},
                         {"hermite", to_json(r.hermite, generators)},
                         {"self_cancellative", to_json(r.self_cancellative, generators)}});
  j["assertions"] = Json::array();
  for (const auto& a : p.assertions) j["assertions"].push_back(to_json(a));
  return j;
}

// ---------------------------------------------------------------------------
// Finite laws

namespace {

std::string quotient_name(QuotientKind k, const QuotientParams& q, const FiniteMonoid& m) {
  std::ostringstream os;
  switch (k) {
    case QuotientKind::OIdeal: {
      os << "M/I, I = {";
      for (std::size_t i = 0; i < q.ideal.size(); ++i) os << (i ? "," : "") << m.label(q.ideal[i]);
      os << "}";
      break;
    }
    case QuotientKind::MaxAntisymmetric:
      os << "max antisymmetric";
      break;
    case QuotientKind::PowerSome:
    case QuotientKind::PowerAll: {
      os << (k == QuotientKind::PowerSome ? "power-some S = Z+{" : "power-all S = {");
      for (std::size_t i = 0; i < q.powers.size(); ++i) os << (i ? "," : "") << q.powers[i];
      os << "}";
      break;
    }
  }
  return os.str();
}

}  // namespace

std::vector<LawCheck> finite_laws(const FiniteMonoid& m) {
  std::vector<LawCheck> out;
  out.reserve(32);
  auto law = [&](std::string name) -> LawCheck& {
    out.push_back({std::move(name), true, {}});
    return out.back();
  };
  auto violate = [](LawCheck& c, const std::string& what) {
    if (c.holds) c.detail = what;
    c.holds = false;
  };
  const std::size_t n = m.size();
  std::vector<Rank> sr(n);
  for (Elem a = 0; a < n; ++a) sr[a] = sr_exact_finite(m, a).value;

  {
    auto& c = law("sr_unit_dichotomy");
    for (Elem a = 0; a < n; ++a) {
      const bool ok = m.is_unit(a) ? (sr[a] && *sr[a] == 1) : !sr[a];
      if (!ok) violate(c, "sr(" + m.label(a) + ") = " + rank_text(sr[a]));
    }
  }
  const auto props = property_report(m);
  if (!props.separativity_characterizations_agree())
    violate(law("separativity_characterizations"), "characterizations disagree");
  else
    law("separativity_characterizations");
  if (!props.strong_separativity_characterizations_agree())
    violate(law("strong_separativity_characterizations"), "characterizations disagree");
  else
    law("strong_separativity_characterizations");

  std::vector<std::pair<QuotientKind, QuotientParams>> constructions;
  std::set<std::vector<Elem>> ideals;
  for (Elem x = 0; x < n; ++x) {
    const auto mask = o_ideal_of(m, x);
    std::vector<Elem> members;
    for (Elem y = 0; y < n; ++y)
      if (mask[y]) members.push_back(y);
    if (ideals.insert(members).second) constructions.push_back({QuotientKind::OIdeal, {members, {}}});
  }
  constructions.push_back({QuotientKind::MaxAntisymmetric, {}});
  for (const std::vector<std::size_t>& s :
       {std::vector<std::size_t>{2}, std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 3}}) {
    constructions.push_back({QuotientKind::PowerSome, {{}, s}});
    constructions.push_back({QuotientKind::PowerAll, {{}, s}});
  }

  auto& valid = law("quotient_valid_and_trivializing");
  auto& oideal = law("oideal_quotient_rank_decreases");
  auto& anti_a = law("max_antisymmetric_preserves_stably_finite_refinement");
  auto& anti_b = law("max_antisymmetric_rank_at_most_plus_one");
  auto& anti_c = law("max_antisymmetric_rank_decreases_when_stably_finite_or_refining");
  auto& anti_d = law("max_antisymmetric_rank_increases_with_refinement");
  auto& anti_e = law("max_antisymmetric_rank_equal_stably_finite_refinement");
  auto& some_a = law("power_some_finite_rank_hermite");
  auto& some_b = law("power_some_conical_preserved_rank_decreases");
  auto& all_b = law("power_all_rank_at_most_max_two");
  auto& all_c = law("power_all_conical_preserved_rank_decreases");
  // References into `out` stay valid: capacity was reserved up front.

  for (const auto& [kind, params] : constructions) {
    const auto name = quotient_name(kind, params, m);
    const Quotient q = quotient(m, kind, params);
    try {
      (void)validate(q.monoid.document());
    } catch (const std::exception& e) {
      violate(valid, name + ": " + e.what());
      continue;
    }
    if (!q.congruence.verify(m)) violate(valid, name + ": kernel is not a congruence");
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (quotient_relates(m, kind, params, u, v) && q.projection[u] != q.projection[v])
          violate(valid, name + ": " + m.label(u) + " ~ " + m.label(v) + " not identified");

    const FiniteMonoid& Q = q.monoid;
    std::vector<Rank> qsr(Q.size());
    std::vector<FiniteRank> qr;
    for (Elem e = 0; e < Q.size(); ++e) qr.push_back(sr_exact_finite(Q, e));
    for (Elem e = 0; e < Q.size(); ++e) qsr[e] = qr[e].value;
    const auto qprops = property_report(Q);
    auto each = [&](LawCheck& c, auto&& ok) {
      for (Elem a = 0; a < n; ++a)
        if (!ok(a))
          violate(c, name + ": sr(" + m.label(a) + ") = " + rank_text(sr[a]) + ", sr([" +
                         m.label(a) + "]) = " + rank_text(qsr[q.projection[a]]));
    };
    auto plus_one = [](const Rank& r) -> Rank { return r ? Rank(*r + 1) : r; };
    auto max_two = [](const Rank& r) -> Rank { return r ? Rank(std::max<std::size_t>(2, *r)) : r; };

    switch (kind) {
      case QuotientKind::OIdeal:
        each(oideal, [&](Elem a) { return rank_le(qsr[q.projection[a]], sr[a]); });
        break;
      case QuotientKind::MaxAntisymmetric: {
        const bool sf = props.stably_finite.value, ref = props.refinement.value;
        if (sf && ref && !(qprops.stably_finite.value && qprops.refinement.value))
          violate(anti_a, name + ": quotient loses stable finiteness or refinement");
        each(anti_b, [&](Elem a) { return rank_le(qsr[q.projection[a]], plus_one(sr[a])); });
        if (sf || qprops.refinement.value)
          each(anti_c, [&](Elem a) { return rank_le(qsr[q.projection[a]], sr[a]); });
        if (ref) each(anti_d, [&](Elem a) { return rank_le(sr[a], qsr[q.projection[a]]); });
        if (sf && ref) each(anti_e, [&](Elem a) { return qsr[q.projection[a]] == sr[a]; });
        break;
      }
      case QuotientKind::PowerSome:
        for (Elem a = 0; a < n; ++a)
          if (sr[a] && !qr[q.projection[a]].hermite.value)
            violate(some_a, name + ": [" + m.label(a) + "] is not Hermite");
        if (props.conical.value) {
          if (!qprops.conical.value) violate(some_b, name + ": quotient is not conical");
          each(some_b, [&](Elem a) { return rank_le(qsr[q.projection[a]], sr[a]); });
        }
        break;
      case QuotientKind::PowerAll:
        each(all_b, [&](Elem a) { return rank_le(qsr[q.projection[a]], max_two(sr[a])); });
        if (props.conical.value) {
          if (!qprops.conical.value) violate(all_c, name + ": quotient is not conical");
          each(all_c, [&](Elem a) { return rank_le(qsr[q.projection[a]], sr[a]); });
        }
        break;
    }
  }
  return out;
}

FiniteMonoid random_finite_monoid(std::mt19937_64& rng, std::size_t max_size) {
  static const char* names[] = {"a", "b", "c"};
  for (;;) {
    MonoidPresentation p;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) p.generators.push_back(names[i]);
    for (std::size_t i = 0; i < k; ++i) {
      const Coeff base = static_cast<Coeff>(rng() % 3), period = static_cast<Coeff>(1 + rng() % 3);
      p.relations.push_back({ExponentVector::unit(k, i, base + period), ExponentVector::unit(k, i, base)});
    }
    const std::size_t extra = rng() % 3;
    for (std::size_t r = 0; r < extra; ++r) {
      ExponentVector u(k), v(k);
      for (std::size_t i = 0; i < k; ++i) {
        u[i] = static_cast<Coeff>(rng() % 3);
        v[i] = static_cast<Coeff>(rng() % 3);
      }
      if (u != v) p.relations.push_back({u, v});
    }
    const auto rs = complete(p, 20000);
    if (!rs.confluent()) continue;
    auto fd = detect_finite(rs, max_size);
    if (fd.closed()) return *fd.monoid;
  }
}

// ---------------------------------------------------------------------------
// Suite

std::size_t thread_budget() {
  if (const char* s = std::getenv("SRANK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

namespace {

struct FactOutcome {
  std::string status, observed, detail;
  bool contradiction = false;
};

/// Fact against a bracket: certified values may only contradict, never pass
/// on their own; passing needs the empirical side as well.
FactOutcome judge_rank(const SrBracket& br, const std::string& expected) {
  FactOutcome o;
  if (expected == "inf") {
    if (br.infinite) return {"pass", "inf", "certified infinite", false};
    if (br.empirical_hi) {
      o = {"fail", "<= " + std::to_string(br.empirical_hi->n) + " (empirical)",
           "clean window at radius " + std::to_string(br.empirical_hi->radius), false};
      return o;
    }
    return {"missing", ">= " + std::to_string(br.certified_lo), "no infinity certificate", false};
  }
  const std::size_t n = std::stoul(expected);
  if (br.infinite) return {"fail", "inf", "certified infinite", true};
  if (br.certified_lo > n)
    return {"fail", ">= " + std::to_string(br.certified_lo), "certified lower bound exceeds claim",
            true};
  if (br.pinned()) {
    const auto v = *br.value();
    return {v == n ? "pass" : "fail", std::to_string(v),
            "certified >= " + std::to_string(br.certified_lo) + ", clean at radius " +
                std::to_string(br.empirical_hi->radius),
            false};
  }
  std::string obs = "[" + std::to_string(br.certified_lo) + ", " +
                    (br.empirical_hi ? std::to_string(br.empirical_hi->n) : std::string("?")) + "]";
  if (br.empirical_hi && br.empirical_hi->n < n)
    return {"fail", obs, "clean window below the claim", false};
  std::string missing;
  if (br.certified_lo < n) missing = "certificate side reaches only " + std::to_string(br.certified_lo);
  if (!br.empirical_hi || br.empirical_hi->n != n)
    missing += std::string(missing.empty() ? "" : "; ") + "empirical side not clean at " + expected;
  return {"missing", obs, missing, false};
}

FactOutcome judge_verdict(const Verdict& v, const std::string& expected) {
  const std::string observed = to_string(v.kind);
  if (expected == "fails") {
    if (v.fails()) return {"pass", observed, v.basis, false};
    if (v.holds()) return {"fail", observed, v.basis, true};
    return {"missing", observed, "no certified failure within radius " + std::to_string(v.radius),
            false};
  }
  if (v.holds()) return {"pass", observed, v.basis, false};
  if (v.fails()) return {"fail", observed, v.basis, true};
  return {"missing", observed, "holds only up to radius " + std::to_string(v.radius), false};
}

FactOutcome judge_flag(const Flag& f, const std::string& expected) {
  const bool want = expected == "holds";
  const std::string observed = f.value ? "Holds" : "Fails";
  return {f.value == want ? "pass" : "fail", observed, "exact", f.value != want};
}

Json fact_json(const Fact& f, const FactOutcome& o) {
  return {{"claim", f.claim},     {"subject", f.subject}, {"expected", f.expected},
          {"observed", o.observed}, {"status", o.status}, {"detail", o.detail},
          {"anchor", f.anchor}};
}

Json audit(const RewriteSystem& rs, const Json& fragment) {
  const Verifier verifier(rs);
  std::size_t checked = 0, rejected = 0;
  Json rejections = Json::array();
  for (const auto& cj : collect_certificates(fragment)) {
    ++checked;
    VerifyResult r;
    try {
      r = verifier.check(certificate_from_json(cj));
    } catch (const std::exception& e) {
      r = {false, std::string("undecodable: ") + e.what()};
    }
    if (!r) {
      ++rejected;
      rejections.push_back({{"certificate", cj}, {"reason", r.reason}});
    }
  }
  return {{"checked", checked}, {"rejected", rejected}, {"rejections", rejections}};
}

struct ContradictionFound {
  std::string what;
};

Json run_presentation_fixture(const Fixture& f, std::uint64_t radius) {
  const auto p = parse_presentation(f.text, f.id);
  const auto rs = complete(p);
  RankOptions opt;
  opt.radius = radius;
  opt.refinement_declared = f.refinement;
  Analyzer an(rs, opt);
  const auto& gens = p.generators;
  auto elem = [&](const std::string& s) { return rs.normal_form(parse_element(s, p)); };

  std::map<ExponentVector, SrBracket, DeglexLess> sr_cache, srp_cache;
  auto sr = [&](const ExponentVector& a) -> const SrBracket& {
    auto it = sr_cache.find(a);
    if (it == sr_cache.end()) it = sr_cache.emplace(a, an.sr_bracket(a)).first;
    return it->second;
  };
  auto srp = [&](const ExponentVector& a) -> const SrBracket& {
    auto it = srp_cache.find(a);
    if (it == srp_cache.end()) it = srp_cache.emplace(a, an.sr_plus_bracket(a)).first;
    return it->second;
  };

  Json out;
  out["id"] = f.id;
  out["title"] = f.title;
  out["format"] = f.format;
  out["input_digest"] = "fnv1a64:" + fnv1a_hex(f.text);
  out["radius"] = radius ? Json(radius) : Json("default");
  out["pinning_radius"] = f.pinning_radius;
  out["rules"] = Json::array();
  for (const auto& r : rs.rules()) out["rules"].push_back(rs.format(r.lhs) + " -> " + rs.format(r.rhs));
  out["grading"] = an.grading() ? Json(an.grading()->weights) : Json(nullptr);

  out["brackets"] = Json::array();
  for (const auto& s : f.probes) {
    const auto a = elem(s);
    out["brackets"].push_back(
        {{"element", rs.format(a)}, {"sr", to_json(sr(a), gens)}, {"sr_plus", to_json(srp(a), gens)}});
  }

  std::vector<Assertion> assertions;
  std::optional<MultiplesProfile> mp;
  if (f.lmax) {
    mp = multiples_profile(an, elem(f.multiples_of), f.lmax, f.property_radius, f.refinement);
    for (const auto& row : mp->rows) {
      sr_cache.emplace(row.element, row.sr);
      srp_cache.emplace(row.element, row.sr_plus);
    }
    out["multiples"] = to_json(*mp, gens);
  }

  const auto wr = an.window_property_report(f.property_radius, 2 * f.property_radius);
  const std::map<std::string, const Verdict*> props = {
      {"conical", &wr.conical},
      {"stably_finite", &wr.stably_finite},
      {"separative", &wr.separative},
      {"strongly_separative", &wr.strongly_separative},
      {"refinement", &wr.refinement},
      {"simplicity", &wr.simplicity}};
  out["properties"] = Json::object();
  for (const auto& [name, v] : props) out["properties"][name] = to_json(*v, gens);
  out["components"] = Json::array();
  for (const auto& cls : wr.components) {
    Json c = Json::array();
    for (const auto& v : cls) c.push_back(rs.format(v));
    out["components"].push_back(c);
  }

  const auto units = unit_group(an);
  if (units) {
    std::vector<std::string> u;
    for (const auto& v : *units) u.push_back(rs.format(v));
    out["units"] = u;
  } else {
    out["units"] = nullptr;
  }

  std::optional<SrSet> srs;
  if (f.sr_set_degree) {
    srs = sr_set(an, f.sr_set_degree);
    for (const auto& [x, br] : srs->elements) sr_cache.emplace(x, br);
    Json j = {{"degree", srs->degree}, {"value", srs->format()}, {"complete", srs->complete()}};
    j["elements"] = Json::array();
    for (const auto& [x, br] : srs->elements) {
      const auto v = pinned(br);
      j["elements"].push_back({{"element", rs.format(x)},
                               {"sr", v ? Json(rank_text(*v)) : Json(nullptr)},
                               {"certified_lo", br.certified_lo}});
    }
    j["unpinned"] = Json::array();
    for (const auto& x : srs->unpinned) j["unpinned"].push_back(rs.format(x));
    j["unit_status_unknown"] = Json::array();
    for (const auto& x : srs->unit_status_unknown) j["unit_status_unknown"].push_back(rs.format(x));
    out["sr_set"] = j;
  }

  out["facts"] = Json::array();
  std::vector<std::string> contradictions;
  for (const auto& fc : f.facts) {
    FactOutcome o;
    if (fc.claim == "sr" || fc.claim == "sr_plus") {
      const auto a = elem(fc.subject);
      o = judge_rank(fc.claim == "sr" ? sr(a) : srp(a), fc.expected);
    } else if (fc.claim == "sr_set") {
      if (!srs) {
        o = {"missing", "", "fixture has no sr-set degree", false};
      } else {
        const auto got = srs->format();
        if (!srs->complete())
          o = {"missing", got, "some elements are not pinned", false};
        else
          o = {got == fc.expected ? "pass" : "fail", got,
               "non-unit normal forms of degree <= " + std::to_string(srs->degree), false};
      }
    } else if (fc.claim == "units") {
      if (!units) {
        o = {"missing", "", "unit group not determined", false};
      } else {
        std::vector<std::string> u;
        for (const auto& v : *units) u.push_back(rs.format(v));
        const auto got = set_text(u);
        o = {got == fc.expected ? "pass" : "fail", got, "exact", got != fc.expected};
      }
    } else if (props.count(fc.claim)) {
      o = judge_verdict(*props.at(fc.claim), fc.expected);
    } else if (fc.claim == "hermite" || fc.claim == "self_cancellative" ||
               fc.claim == "cancellative") {
      const auto ep = an.element_predicates(elem(fc.subject), f.property_radius);
      const Verdict& v = fc.claim == "hermite"            ? ep.hermite
                         : fc.claim == "self_cancellative" ? ep.self_cancellative
                                                           : ep.cancellative;
      o = judge_verdict(v, fc.expected);
      if (v.certificate) out["evidence"][fc.claim + ":" + fc.subject] = to_json(*v.certificate, gens);
    } else {
      throw std::logic_error("unknown fact claim '" + fc.claim + "'");
    }
    if (o.contradiction)
      contradictions.push_back(f.id + " " + fc.claim + "(" + fc.subject + "): expected " +
                               fc.expected + ", observed " + o.observed);
    out["facts"].push_back(fact_json(fc, o));
  }

  // Fixture-level theorem checks.
  {
    auto a = make_assertion("unit_translation", "sr(x + u) = sr(x) for a unit u");
    std::size_t checked = 0;
    for (const auto& [xs, us] : f.unit_translations) {
      const auto x = elem(xs), u = elem(us);
      const auto vx = pinned(sr(x)), vxu = pinned(sr(rs.add(x, u)));
      if (!vx || !vxu) continue;
      ++checked;
      record(a, *vx == *vxu, "sr(" + rs.format(rs.add(x, u)) + ") != sr(" + rs.format(x) + ")");
    }
    finish(a, checked);
    if (!f.unit_translations.empty()) assertions.push_back(a);
  }
  {
    auto a = make_assertion("subadditivity", "sr(x + y) <= max(sr(x), sr(y))");
    std::size_t checked = 0;
    std::vector<ExponentVector> base;
    for (const auto& s : f.probes) base.push_back(elem(s));
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i; j < base.size(); ++j) {
        const auto s = rs.add(base[i], base[j]);
        const auto vx = pinned(sr(base[i])), vy = pinned(sr(base[j])), vs = pinned(sr(s));
        if (!vx || !vy || !vs) continue;
        ++checked;
        const bool exceeds = *vx && *vy && (!*vs || **vs > std::max(**vx, **vy));
        record(a, !exceeds, "sr(" + rs.format(s) + ") = " + rank_text(*vs));
      }
    finish(a, checked);
    assertions.push_back(a);
  }
  {
    auto a = make_assertion("strong_weak_probes", "sr(x) <= sr+(x) <= sr(x) + 1 on probes");
    std::size_t checked = 0;
    for (const auto& s : f.probes) {
      const auto x = elem(s);
      const auto v = pinned(sr(x)), vp = pinned(srp(x));
      if (!v || !vp) continue;
      ++checked;
      const bool ok = !*v ? !*vp : (*vp && **v <= **vp && **vp <= **v + 1);
      record(a, ok, s + ": sr = " + rank_text(*v) + ", sr+ = " + rank_text(*vp));
    }
    finish(a, checked);
    assertions.push_back(a);
  }
  if (f.separative) {
    auto a = make_assertion("separative_trichotomy", "pinned sr values lie in {1, 2, inf}");
    std::size_t checked = 0;
    for (const auto& [x, br] : sr_cache)
      if (auto v = pinned(br)) {
        ++checked;
        record(a, !*v || **v <= 2, rs.format(x) + ": " + rank_text(*v));
      }
    finish(a, checked);
    assertions.push_back(a);
  }
  if (mp && wr.conical.holds()) {
    auto a = make_assertion("conical_sr_one_cancellative",
                            "on a conical monoid sr = 1 leaves no certified cancellation failure");
    std::size_t checked = 0;
    for (const auto& row : mp->rows)
      if (auto v = pinned(row.sr); v && *v && **v == 1) {
        ++checked;
        record(a, !row.cancellative.fails(), rs.format(row.element));
      }
    finish(a, checked);
    assertions.push_back(a);
  }
  if (mp) {
    const auto prof = an.srkl_profile(mp->a, 4);
    Json pj = {{"kmax", prof.kmax}, {"m_lo", prof.m_lo}, {"m_lo_conditional", prof.m_lo_conditional},
               {"m_hi", prof.m_hi ? Json(*prof.m_hi) : Json(nullptr)}};
    pj["verdicts"] = Json::array();
    for (const auto& row : prof.verdicts) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_json(v, gens));
      pj["verdicts"].push_back(r);
    }
    out["srkl"] = pj;
    auto a = make_assertion("m_bound", "m_{a,M} <= sr(a) - 1, with equality under refinement");
    std::size_t checked = 0;
    if (auto v = pinned(prof.sr); v && *v) {
      const std::size_t n = **v;
      ++checked;
      record(a, prof.m_lo <= n - 1, "m_lo = " + std::to_string(prof.m_lo));
      if (f.refinement)
        record(a, prof.m_hi && prof.m_lo == n - 1 && *prof.m_hi == n - 1,
               "m bracket [" + std::to_string(prof.m_lo) + ", " +
                   (prof.m_hi ? std::to_string(*prof.m_hi) : std::string("?")) + "]");
    }
    finish(a, checked);
    assertions.push_back(a);
    for (const auto& x : mp->assertions) assertions.push_back(x);
  }
  out["assertions"] = Json::array();
  for (const auto& a : assertions) out["assertions"].push_back(to_json(a));
  out["audit"] = audit(rs, out);
  out["contradictions"] = contradictions;
  return out;
}

Json run_table_fixture(const Fixture& f) {
  const auto m = validate(parse_cayley(f.text));
  Json out;
  out["id"] = f.id;
  out["title"] = f.title;
  out["format"] = f.format;
  out["input_digest"] = "fnv1a64:" + fnv1a_hex(f.text);
  out["table"] = to_json(m);
  const auto props = property_report(m);
  const std::map<std::string, const Flag*> flags = {
      {"conical", &props.conical},
      {"stably_finite", &props.stably_finite},
      {"separative", &props.separative},
      {"strongly_separative", &props.strongly_separative},
      {"refinement", &props.refinement},
      {"cancellative", &props.cancellative}};
  out["properties"] = Json::object();
  for (const auto& [name, fl] : flags) out["properties"][name] = fl->value;

  auto elem = [&](const std::string& s) {
    auto e = m.find(s);
    if (!e) throw std::invalid_argument("unknown element '" + s + "' in " + f.id);
    return *e;
  };
  out["brackets"] = Json::array();
  for (const auto& s : f.probes) {
    const auto r = sr_exact_finite(m, elem(s));
    const auto rp = sr_plus_exact_finite(m, elem(s));
    Json j = {{"element", s}, {"sr", rank_text(r.value)}, {"sr_plus", rank_text(rp)},
              {"hermite", r.hermite.value}, {"self_cancellative", r.self_cancellative.value}};
    if (r.collapse) j["collapse"] = {{"k", r.collapse->first}, {"z", m.label(r.collapse->second)}};
    out["brackets"].push_back(j);
  }
  std::vector<std::string> units;
  for (Elem u : m.units()) units.push_back(m.label(u));
  out["units"] = units;

  out["facts"] = Json::array();
  std::vector<std::string> contradictions;
  for (const auto& fc : f.facts) {
    FactOutcome o;
    if (fc.claim == "sr") {
      const auto got = rank_text(sr_exact_finite(m, elem(fc.subject)).value);
      o = {got == fc.expected ? "pass" : "fail", got, "exact", got != fc.expected};
    } else if (fc.claim == "sr_plus") {
      const auto got = rank_text(sr_plus_exact_finite(m, elem(fc.subject)));
      o = {got == fc.expected ? "pass" : "fail", got, "exact", got != fc.expected};
    } else if (fc.claim == "hermite" || fc.claim == "self_cancellative") {
      const auto r = sr_exact_finite(m, elem(fc.subject));
      o = judge_flag(fc.claim == "hermite" ? r.hermite : r.self_cancellative, fc.expected);
    } else if (flags.count(fc.claim)) {
      o = judge_flag(*flags.at(fc.claim), fc.expected);
    } else if (fc.claim == "units") {
      const auto got = set_text(units);
      o = {got == fc.expected ? "pass" : "fail", got, "exact", got != fc.expected};
    } else {
      throw std::logic_error("unknown fact claim '" + fc.claim + "'");
    }
    if (o.contradiction)
      contradictions.push_back(f.id + " " + fc.claim + "(" + fc.subject + "): expected " +
                               fc.expected + ", observed " + o.observed);
    out["facts"].push_back(fact_json(fc, o));
  }
  out["assertions"] = Json::array();
  for (const auto& law : finite_laws(m))
    out["assertions"].push_back(to_json(Assertion{
        "finite_law." + law.law, "exact law on the table", law.holds ? "pass" : "fail", law.detail}));
  out["audit"] = {{"checked", 0}, {"rejected", 0}, {"rejections", Json::array()}};
  out["contradictions"] = contradictions;
  return out;
}

}  // namespace

Json run_fixture(const Fixture& f, std::uint64_t radius) {
  if (f.format == "ctab") return run_table_fixture(f);
  return run_presentation_fixture(f, radius);
}

SuiteResult paper_suite(const SuiteOptions& options) {
  std::vector<const Fixture*> selected;
  for (const auto& id : options.only) selected.push_back(&find_fixture(id));
  if (options.only.empty())
    for (const auto& f : fixture_catalog()) selected.push_back(&f);

  std::vector<Json> results(selected.size());
  std::vector<std::exception_ptr> errors(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < selected.size();) {
      try {
        const auto* f = selected[i];
        auto it = options.radius.find(f->id);
        results[i] = run_fixture(*f, it == options.radius.end() ? 0 : it->second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(options.threads ? options.threads : thread_budget(),
                                         selected.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SuiteResult out;
  out.results["fixtures"] = Json::array();
  for (auto& r : results) {
    for (const auto& fc : r["facts"]) {
      ++out.facts;
      const auto s = fc["status"].get<std::string>();
      out.facts_passed += s == "pass";
      out.facts_missing += s == "missing";
      out.facts_failed += s == "fail";
    }
    for (const auto& a : r["assertions"]) out.assertions_failed += a["status"] == "fail";
    out.certificates += r["audit"]["checked"].get<std::size_t>();
    out.certificates_rejected += r["audit"]["rejected"].get<std::size_t>();
    if (!r["contradictions"].empty())
      throw SuiteContradiction(r["contradictions"][0].get<std::string>(), r);
    out.results["fixtures"].push_back(std::move(r));
  }

  std::mt19937_64 rng(options.seed);
  Json laws = {{"samples", options.law_samples}, {"seed", options.seed}, {"max_size", 8}};
  laws["violations"] = Json::array();
  for (std::size_t i = 0; i < options.law_samples; ++i) {
    const auto m = random_finite_monoid(rng, 8);
    for (const auto& law : finite_laws(m))
      if (!law.holds) {
        ++out.law_violations;
        laws["violations"].push_back(
            {{"sample", i}, {"law", law.law}, {"detail", law.detail}, {"table", to_json(m)}});
      }
  }
  out.results["finite_laws"] = laws;
  out.results["summary"] = {{"facts", out.facts},
                            {"passed", out.facts_passed},
                            {"missing", out.facts_missing},
                            {"failed", out.facts_failed},
                            {"assertions_failed", out.assertions_failed},
                            {"certificates", out.certificates},
                            {"certificates_rejected", out.certificates_rejected},
                            {"law_violations", out.law_violations},
                            {"passed_all", out.passed()}};
  return out;
}

}  // namespace srank
