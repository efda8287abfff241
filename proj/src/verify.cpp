#include "srank/verify.hpp"

#include <functional>

namespace srank {

namespace {

VerifyResult accept() { return {true, {}}; }
VerifyResult reject(std::string why) { return {false, std::move(why)}; }

std::uint64_t grade_of(const std::vector<std::uint64_t>& w, const ExponentVector& v) {
  std::uint64_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) g += w[i] * v[i];
  return g;
}

bool grading_respects(const MonoidPresentation& p, const std::vector<std::uint64_t>& w) {
  if (w.size() != p.rank()) return false;
  for (const auto& r : p.relations)
    if (grade_of(w, r.lhs) != grade_of(w, r.rhs)) return false;
  return true;
}

/// All irreducible vectors of the given grade, by plain recursion.
std::vector<ExponentVector> slice(const RewriteSystem& rs, const std::vector<std::uint64_t>& w,
                                  std::uint64_t grade) {
  std::vector<ExponentVector> out;
  ExponentVector cur(w.size());
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i == w.size()) {
      if (left == 0 && rs.irreducible(cur)) out.push_back(cur);
      return;
    }
    for (Coeff c = 0; c * w[i] <= left; ++c) {
      cur[i] = c;
      rec(i + 1, left - c * w[i]);
    }
    cur[i] = 0;
  };
  rec(0, grade);
  return out;
}

Elem image(const FiniteMonoid& t, const std::vector<Elem>& asg, const ExponentVector& v) {
  Elem acc = t.zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (Coeff j = 0; j < v[i]; ++j) acc = t.add(acc, asg[i]);
  return acc;
}

VerifyResult hom_valid(const RewriteSystem& rs, const HomData& h) {
  if (h.assignment.size() != rs.rank()) return reject("hom assignment has wrong length");
  for (Elem e : h.assignment)
    if (e >= h.target.size()) return reject("hom assignment out of range");
  for (const auto& r : rs.presentation().relations)
    if (image(h.target, h.assignment, r.lhs) != image(h.target, h.assignment, r.rhs))
      return reject("hom does not respect a defining relation");
  return accept();
}

}  // namespace

Verifier::Verifier(const RewriteSystem& rs) : rs_(rs), sound_(rs.confluent() && critical_pairs_join(rs)) {}

VerifyResult Verifier::check(const Certificate& c) const {
  if (!sound_) return reject("rewrite system is not confluence-verified");
  const std::size_t k = rs_.rank();
  for (const auto& [name, v] : c.elements)
    if (v.size() != k) return reject("element " + name + " has wrong length");
  auto need = [&](std::initializer_list<const char*> names) {
    for (auto n : names)
      if (!c.elements.count(n)) return false;
    return true;
  };
  auto nf = [&](const ExponentVector& v) { return rs_.normal_form(v); };
  auto mul = [](std::int64_t m, const ExponentVector& v) { return static_cast<Coeff>(m) * v; };
  const std::string& p = c.property;

  switch (c.kind) {
    case CertificateKind::W12: {
      if (p != "sr_lower" || !need({"a", "b", "c"})) return reject("malformed W12");
      const auto n = c.param("n");
      if (n < 1) return reject("W12 needs n >= 1");
      const auto &a = c.element("a"), &b = c.element("b"), &cc = c.element("c");
      if (nf(mul(n + 1, a) + b) != nf(a + cc)) return reject("(n+1)a + b != a + c");
      if (nf(mul(n, a) + b) == nf(cc)) return reject("na + b = c");
      return accept();
    }
    case CertificateKind::Refutation:
    case CertificateKind::GradedSearch: {
      if (p == "srkl_fails") {
        if (!need({"a", "x", "y"})) return reject("malformed srkl certificate");
        const auto kk = c.param("k"), l = c.param("l");
        if (l < 1 || kk < l) return reject("need 1 <= l <= k");
        const auto &a = c.element("a"), &x = c.element("x"), &y = c.element("y");
        if (nf(mul(kk, a) + x) != nf(mul(l, a) + y)) return reject("ka + x != la + y");
        if (c.kind == CertificateKind::Refutation) {
          if (!c.hom) return reject("refutation without hom");
          if (auto r = hom_valid(rs_, *c.hom); !r) return r;
          const auto& t = c.hom->target;
          const Elem A = image(t, c.hom->assignment, a);
          Elem ka = t.zero(), la = t.zero();
          for (std::int64_t i = 0; i < kk; ++i) ka = t.add(ka, A);
          for (std::int64_t i = 0; i < l; ++i) la = t.add(la, A);
          const Elem px = image(t, c.hom->assignment, x), py = image(t, c.hom->assignment, y);
          for (Elem e = 0; e < t.size(); ++e)
            if (t.add(la, e) == ka && t.add(e, px) == py) return reject("target admits e");
          return accept();
        }
        if (!c.grading) return reject("graded search without grading");
        const auto& w = c.grading->weights;
        if (!grading_respects(rs_.presentation(), w)) return reject("grading is not compatible");
        for (auto wi : w)
          if (wi == 0) return reject("grading is not strictly positive");
        const auto gk = grade_of(w, mul(kk, a)), gl = grade_of(w, mul(l, a));
        if (gk < gl) return accept();
        const auto ka = nf(mul(kk, a)), ny = nf(y);
        for (const auto& e : slice(rs_, w, gk - gl))
          if (nf(mul(l, a) + e) == ka && nf(e + x) == ny) return reject("an e exists");
        return accept();
      }
      if (c.kind == CertificateKind::GradedSearch && p == "not_refinement") {
        if (!need({"x1", "x2", "y1", "y2"}) || !c.grading) return reject("malformed refinement");
        const auto& w = c.grading->weights;
        if (!grading_respects(rs_.presentation(), w)) return reject("grading is not compatible");
        for (auto wi : w)
          if (wi == 0) return reject("grading is not strictly positive");
        const auto &x1 = c.element("x1"), &x2 = c.element("x2");
        const auto y1 = nf(c.element("y1")), y2 = nf(c.element("y2"));
        if (nf(x1 + x2) != nf(y1 + y2)) return reject("x1 + x2 != y1 + y2");
        auto decompositions = [&](const ExponentVector& s) {
          std::vector<std::pair<ExponentVector, ExponentVector>> out;
          const auto ns = nf(s);
          const auto gs = grade_of(w, s);
          for (std::uint64_t g = 0; g <= gs; ++g)
            for (const auto& u : slice(rs_, w, g))
              for (const auto& v : slice(rs_, w, gs - g))
                if (nf(u + v) == ns) out.emplace_back(u, v);
          return out;
        };
        const auto d1 = decompositions(x1), d2 = decompositions(x2);
        for (const auto& [z11, z12] : d1)
          for (const auto& [z21, z22] : d2)
            if (nf(z11 + z21) == y1 && nf(z12 + z22) == y2) return reject("a refinement exists");
        return accept();
      }
      if (c.kind == CertificateKind::GradedSearch && p == "not_simple") {
        if (!need({"x", "y"}) || !c.grading) return reject("malformed simplicity certificate");
        const auto& w = c.grading->weights;
        if (!grading_respects(rs_.presentation(), w)) return reject("grading is not compatible");
        if (grade_of(w, c.element("x")) != 0 || grade_of(w, c.element("y")) == 0)
          return reject("grades do not separate x from y");
        if (c.support.size() != 1 || c.support[0].property != "non_unit" ||
            c.support[0].elements.count("a") == 0 || nf(c.support[0].element("a")) != nf(c.element("x")))
          return reject("missing non-unit evidence for x");
        return check(c.support[0]);
      }
      return reject("unknown property for " + std::string(to_string(c.kind)));
    }
    case CertificateKind::PurelyInf: {
      if (p != "sr_infinite" || !need({"a", "z"})) return reject("malformed PurelyInf");
      const auto kk = c.param("k");
      if (kk < 1) return reject("PurelyInf needs k >= 1");
      const auto &a = c.element("a"), &z = c.element("z");
      if (nf(mul(kk + 1, a) + z) != nf(mul(kk, a))) return reject("(k+1)a + z != ka");
      if (c.support.size() != 1 || c.support[0].property != "non_unit" ||
          c.support[0].elements.count("a") == 0 || nf(c.support[0].element("a")) != nf(a))
        return reject("missing non-unit evidence");
      return check(c.support[0]);
    }
    case CertificateKind::NonUnit: {
      if (p != "non_unit" || !need({"a"})) return reject("malformed NonUnit");
      const auto& a = c.element("a");
      if (c.grading) {
        if (!grading_respects(rs_.presentation(), c.grading->weights))
          return reject("grading is not compatible");
        if (grade_of(c.grading->weights, a) == 0) return reject("a has grade 0");
        return accept();
      }
      if (!c.hom) return reject("NonUnit without evidence");
      if (auto r = hom_valid(rs_, *c.hom); !r) return r;
      const auto& t = c.hom->target;
      const Elem A = image(t, c.hom->assignment, a);
      for (Elem e = 0; e < t.size(); ++e)
        if (t.add(A, e) == t.zero()) return reject("image of a is a unit");
      return accept();
    }
    case CertificateKind::Counterexample: {
      auto eq = [&](const ExponentVector& u, const ExponentVector& v) { return nf(u) == nf(v); };
      if (p == "strong_sr_fails") {
        if (!need({"a", "x", "y"})) return reject("malformed");
        const auto m = c.param("m");
        if (m < 1) return reject("m >= 1 required");
        const auto &a = c.element("a"), &x = c.element("x"), &y = c.element("y");
        if (!eq(mul(m, a) + x, a + y)) return reject("ma + x != a + y");
        if (eq(mul(m - 1, a) + x, y)) return reject("(m-1)a + x = y");
        return accept();
      }
      if (p == "not_hermite") {
        if (!need({"a", "x", "y"})) return reject("malformed");
        const auto &a = c.element("a"), &x = c.element("x"), &y = c.element("y");
        if (!eq(mul(2, a) + x, a + y)) return reject("2a + x != a + y");
        if (eq(a + x, y)) return reject("a + x = y");
        return accept();
      }
      if (p == "not_self_cancellative") {
        if (!need({"a", "y"})) return reject("malformed");
        const auto &a = c.element("a"), &y = c.element("y");
        if (!eq(mul(2, a), a + y)) return reject("2a != a + y");
        if (eq(a, y)) return reject("a = y");
        return accept();
      }
      if (p == "not_cancellative") {
        if (!need({"a", "x", "y"})) return reject("malformed");
        const auto &a = c.element("a"), &x = c.element("x"), &y = c.element("y");
        if (!eq(a + x, a + y)) return reject("a + x != a + y");
        if (eq(x, y)) return reject("x = y");
        return accept();
      }
      if (p == "not_separative" || p == "not_strongly_separative") {
        if (!need({"x", "y"})) return reject("malformed");
        const auto &x = c.element("x"), &y = c.element("y");
        if (!eq(mul(2, x), x + y)) return reject("2x != x + y");
        if (p == "not_separative" && !eq(x + y, mul(2, y))) return reject("x + y != 2y");
        if (eq(x, y)) return reject("x = y");
        return accept();
      }
      if (p == "not_conical") {
        if (!need({"x", "y"})) return reject("malformed");
        const auto &x = c.element("x"), &y = c.element("y");
        if (!nf(x + y).is_zero()) return reject("x + y != 0");
        if (nf(x).is_zero()) return reject("x = 0");
        return accept();
      }
      if (p == "not_stably_finite") {
        if (!need({"a", "x"})) return reject("malformed");
        const auto &a = c.element("a"), &x = c.element("x");
        if (!eq(a + x, a)) return reject("a + x != a");
        if (nf(x).is_zero()) return reject("x = 0");
        return accept();
      }
      return reject("unknown counterexample property '" + p + "'");
    }
  }
  return reject("unknown certificate kind");
}

VerifyResult verify_certificate(const RewriteSystem& rs, const Certificate& c) {
  return Verifier(rs).check(c);
}

}  // namespace srank
