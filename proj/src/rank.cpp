#include "srank/rank.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace srank {

namespace {

FiniteMonoid table_monoid(std::vector<std::string> labels,
                          const std::function<Elem(Elem, Elem)>& op) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) t[i][j] = op(i, j);
  return FiniteMonoid::from_table(std::move(labels), 0, t);
}

std::vector<std::string> numbered(std::size_t count, bool with_inf) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::to_string(i));
  if (with_inf) out.push_back("inf");
  return out;
}

std::string sum_text(const RewriteSystem& rs, std::initializer_list<ExponentVector> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += " + ";
    out += "(" + rs.format(p) + ")";
  }
  return out;
}

}  // namespace

std::vector<Target> builtin_targets(std::size_t max_size) {
  std::vector<Target> out;
  // {0,1,...,d,inf}: sums beyond d are absorbed.
  for (std::size_t d = 0; d + 2 <= max_size; ++d) {
    const Elem inf = d + 1;
    out.push_back({"trunc" + std::to_string(d),
                   table_monoid(numbered(d + 1, true), [=](Elem i, Elem j) -> Elem {
                     if (i == inf || j == inf || i + j > d) return inf;
                     return i + j;
                   })});
  }
  // {0..d} with capped sums.
  for (std::size_t d = 2; d + 1 <= max_size; ++d)
    out.push_back({"cap" + std::to_string(d),
                   table_monoid(numbered(d + 1, false),
                                [=](Elem i, Elem j) -> Elem { return std::min<Elem>(i + j, d); })});
  // Z/m with an adjoined absorbing element.
  for (std::size_t m = 2; m + 1 <= max_size; ++m)
    out.push_back({"cyclic" + std::to_string(m) + "+inf",
                   table_monoid(numbered(m, true), [=](Elem i, Elem j) -> Elem {
                     if (i == m || j == m) return m;
                     return (i + j) % m;
                   })});
  // Chains under max.
  for (std::size_t d = 2; d + 1 <= max_size; ++d)
    out.push_back({"chain" + std::to_string(d),
                   table_monoid(numbered(d + 1, false),
                                [](Elem i, Elem j) -> Elem { return std::max(i, j); })});
  return out;
}

// ---------------------------------------------------------------------------
// Analyzer

Analyzer::Analyzer(const RewriteSystem& rs, RankOptions options)
    : rs_(rs), opt_(std::move(options)) {
  rs_.require_confluent();
  grading_ = find_grading(rs_.presentation());
  positive_ = grading_ && grading_->strictly_positive();
  if (!grading_ || grading_->support() == 0) {
    auto fd = detect_finite(rs_, 4096);
    if (fd.closed()) {
      for (const auto& v : fd.elements) finite_degree_ = std::max(finite_degree_, v.degree());
      finite_ = std::move(fd);
    }
  }
  targets_ = builtin_targets(opt_.target_size);
  for (auto& t : opt_.extra_targets) targets_.push_back(t);
  if (finite_ && finite_->monoid->size() <= 64) targets_.push_back({"self", *finite_->monoid});
}

std::uint64_t Analyzer::radius_for(std::size_t n) const {
  if (opt_.radius) return opt_.radius;
  return 4 * (rs_.presentation().max_relation_degree() + n);
}

std::uint64_t Analyzer::witness_radius_for(std::uint64_t radius) const {
  if (opt_.witness_radius) return std::max(opt_.witness_radius, radius);
  return 2 * radius;
}

const Window& Analyzer::window(std::uint64_t radius) {
  auto& slot = windows_[radius];
  if (!slot) slot = std::make_unique<Window>(rs_, radius);
  return *slot;
}

bool Analyzer::covers(std::uint64_t radius) const {
  return finite_.has_value() && radius >= finite_degree_;
}

const std::vector<ExponentVector>& Analyzer::grade_slice(std::uint64_t grade) {
  if (!positive_) throw std::logic_error("grade_slice requires a strictly positive grading");
  auto it = slices_.find(grade);
  if (it != slices_.end()) return it->second;
  const auto& w = grading_->weights;
  const std::size_t k = rs_.rank();
  std::vector<ExponentVector> out;
  ExponentVector cur(k);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == k) {
      if (left % w[i] != 0) return;
      cur[i] = static_cast<Coeff>(left / w[i]);
      if (rs_.irreducible(cur)) out.push_back(cur);
      cur[i] = 0;
      return;
    }
    for (Coeff c = 0; c * w[i] <= left; ++c) {
      cur[i] = c;
      if (!rs_.irreducible(cur)) break;
      self(self, i + 1, left - c * w[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, grade);
  std::sort(out.begin(), out.end(), DeglexLess{});
  return slices_.emplace(grade, std::move(out)).first->second;
}

std::vector<ExponentVector> Analyzer::solutions(const ExponentVector& la, const ExponentVector& s,
                                                std::uint64_t witness_radius) {
  std::vector<ExponentVector> out;
  if (positive_) {
    const auto gs = (*grading_)(s), gl = (*grading_)(la);
    if (gs < gl) return out;
    for (const auto& y : grade_slice(gs - gl))
      if (rs_.add(la, y) == s) out.push_back(y);
    return out;
  }
  for (const auto& y : window(witness_radius).elements())
    if (rs_.add(la, y) == s) out.push_back(y);
  return out;
}

const std::vector<Analyzer::ValidHom>& Analyzer::homs() {
  if (homs_) return *homs_;
  homs_.emplace();
  const std::size_t k = rs_.rank();
  for (const auto& t : targets_) {
    if (t.name == "self") {
      std::vector<Elem> asg;
      for (std::size_t i = 0; i < k; ++i)
        asg.push_back(finite_->index_of(rs_.normal_form(rs_.presentation().generator(i))));
      homs_->push_back({&t, std::move(asg)});
      continue;
    }
    const std::size_t n = t.monoid.size();
    double total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(n);
    if (total > 200000) continue;
    std::vector<Elem> asg(k, 0);
    for (;;) {
      if (check_hom(rs_, t.monoid, asg).valid) homs_->push_back({&t, asg});
      std::size_t i = 0;
      while (i < k && ++asg[i] == n) asg[i++] = 0;
      if (i == k) break;
    }
  }
  return *homs_;
}

std::optional<Certificate> Analyzer::non_unit(const ExponentVector& a) {
  if (a.is_zero()) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::NonUnit;
  c.property = "non_unit";
  c.elements["a"] = a;
  if (grading_ && (*grading_)(a) > 0) {
    c.grading = *grading_;
    c.claims.push_back("grade(" + rs_.format(a) + ") = " + std::to_string((*grading_)(a)) +
                       " > 0 = grade(0)");
    return c;
  }
  for (const auto& h : homs()) {
    const Elem img = hom_image(h.target->monoid, h.assignment, a);
    if (h.target->monoid.is_unit(img)) continue;
    c.hom = HomData{h.target->name, h.target->monoid, h.assignment};
    c.claims.push_back("image " + h.target->monoid.label(img) + " is not a unit in " +
                       h.target->name);
    return c;
  }
  return std::nullopt;
}

std::optional<Certificate> Analyzer::refute(const ExponentVector& a, std::size_t k, std::size_t l,
                                            const ExponentVector& x, const ExponentVector& y) {
  for (const auto& h : homs()) {
    const auto& T = h.target->monoid;
    const Elem A = hom_image(T, h.assignment, a);
    const Elem ka = T.times(k, A), la = T.times(l, A);
    const Elem px = hom_image(T, h.assignment, x), py = hom_image(T, h.assignment, y);
    bool exists = false;
    for (Elem e = 0; e < T.size() && !exists; ++e)
      exists = T.add(la, e) == ka && T.add(e, px) == py;
    if (exists) continue;
    Certificate c;
    c.kind = CertificateKind::Refutation;
    c.property = "srkl_fails";
    c.elements = {{"a", a}, {"x", x}, {"y", y}};
    c.params = {{"k", static_cast<std::int64_t>(k)}, {"l", static_cast<std::int64_t>(l)}};
    c.hom = HomData{h.target->name, T, h.assignment};
    c.claims.push_back(sum_text(rs_, {static_cast<Coeff>(k) * a, x}) + " = " +
                       sum_text(rs_, {static_cast<Coeff>(l) * a, y}));
    c.claims.push_back("no e in " + h.target->name + " with " + T.label(la) + " + e = " +
                       T.label(ka) + " and e + " + T.label(px) + " = " + T.label(py));
    return c;
  }
  return std::nullopt;
}

Verdict Analyzer::srkl_condition(const ExponentVector& a_in, std::size_t k, std::size_t l,
                                 std::uint64_t radius, std::uint64_t witness_radius) {
  const ExponentVector a = rs_.normal_form(a_in);
  Verdict v;
  v.radius = radius;
  v.witness_radius = witness_radius;
  v.graded = positive_;
  const auto ka = rs_.times(static_cast<Coeff>(k), a);
  const auto la = rs_.times(static_cast<Coeff>(l), a);
  const auto es = solutions(la, ka, witness_radius);

  // Index y by the normal form of la + y once, for the whole window.
  std::unordered_map<ExponentVector, std::vector<ExponentVector>, ExponentHash> by_sum;
  if (!positive_)
    for (const auto& y : window(witness_radius).elements())
      by_sum[rs_.add(la, y)].push_back(y);

  for (const auto& x : window(radius).elements()) {
    const auto s = rs_.add(ka, x);
    std::vector<ExponentVector> ys;
    if (positive_) {
      ys = solutions(la, s, witness_radius);
    } else if (auto it = by_sum.find(s); it != by_sum.end()) {
      ys = it->second;
    }
    for (const auto& y : ys) {
      bool ok = std::any_of(es.begin(), es.end(), [&](const auto& e) { return rs_.add(e, x) == y; });
      if (ok) continue;
      std::optional<Certificate> cert;
      if (positive_) {
        Certificate c;
        c.kind = CertificateKind::GradedSearch;
        c.property = "srkl_fails";
        c.elements = {{"a", a}, {"x", x}, {"y", y}};
        c.params = {{"k", static_cast<std::int64_t>(k)}, {"l", static_cast<std::int64_t>(l)}};
        c.grading = *grading_;
        c.claims.push_back(sum_text(rs_, {ka, x}) + " = " + sum_text(rs_, {la, y}));
        c.claims.push_back("no e of grade " +
                           std::to_string((*grading_)(ka) - (*grading_)(la)) +
                           " with la + e = ka and e + x = y");
        cert = std::move(c);
      } else {
        cert = refute(a, k, l, x, y);
      }
      if (cert) {
        v.kind = VerdictKind::Fails;
        v.basis = "certificate";
        v.witness = {x, y};
        v.certificate = std::move(cert);
        v.candidate_failure = false;
        return v;
      }
      if (!v.candidate_failure) {
        v.candidate_failure = true;
        v.witness = {x, y};
      }
    }
  }
  if (!v.candidate_failure && covers(radius) && (positive_ || covers(witness_radius))) {
    v.kind = VerdictKind::Holds;
    v.basis = "exhaustive";
  }
  return v;
}

Verdict Analyzer::sr_condition(const ExponentVector& a_in, std::size_t n, std::uint64_t radius,
                               std::uint64_t witness_radius, bool refinement_mode) {
  if (!refinement_mode) return srkl_condition(a_in, n, 1, radius, witness_radius);
  if (!opt_.refinement_declared)
    throw RefinementNotDeclared("refinement mode requires a monoid declared to have refinement");

  // Reduced condition: na = u + v and a = u + w imply w <= v.
  const ExponentVector a = rs_.normal_form(a_in);
  const auto na = rs_.times(static_cast<Coeff>(n), a);
  Verdict v;
  v.radius = radius;
  v.witness_radius = witness_radius;
  v.basis = "window";
  v.note = "refinement mode";
  const auto& wit = window(witness_radius).elements();
  for (const auto& u : window(radius).elements()) {
    const auto ws = solutions(u, a, witness_radius);
    if (ws.empty()) continue;
    const auto vs = solutions(u, na, witness_radius);
    for (const auto& w : ws)
      for (const auto& vv : vs) {
        bool below = std::any_of(wit.begin(), wit.end(),
                                 [&](const auto& z) { return rs_.add(w, z) == vv; });
        if (!below && !v.candidate_failure) {
          v.candidate_failure = true;
          v.witness = {u, vv, w};
        }
      }
  }
  if (!v.candidate_failure && covers(radius) && covers(witness_radius)) {
    v.kind = VerdictKind::Holds;
    v.basis = "exhaustive";
  }
  return v;
}

Verdict Analyzer::strong_condition(const ExponentVector& a_in, std::size_t m,
                                   std::uint64_t radius, std::uint64_t witness_radius) {
  const ExponentVector a = rs_.normal_form(a_in);
  Verdict v;
  v.radius = radius;
  v.witness_radius = witness_radius;
  v.graded = positive_;
  const auto ma = rs_.times(static_cast<Coeff>(m), a);
  const auto pa = rs_.times(static_cast<Coeff>(m - 1), a);
  std::unordered_map<ExponentVector, std::vector<ExponentVector>, ExponentHash> by_sum;
  if (!positive_)
    for (const auto& y : window(witness_radius).elements()) by_sum[rs_.add(a, y)].push_back(y);
  for (const auto& x : window(radius).elements()) {
    const auto s = rs_.add(ma, x);
    const auto t = rs_.add(pa, x);
    std::vector<ExponentVector> ys;
    if (positive_) {
      ys = solutions(a, s, witness_radius);
    } else if (auto it = by_sum.find(s); it != by_sum.end()) {
      ys = it->second;
    }
    for (const auto& y : ys) {
      if (y == t) continue;
      Certificate c;
      c.kind = CertificateKind::Counterexample;
      c.property = "strong_sr_fails";
      c.elements = {{"a", a}, {"x", x}, {"y", y}};
      c.params = {{"m", static_cast<std::int64_t>(m)}};
      c.claims.push_back(sum_text(rs_, {ma, x}) + " = " + sum_text(rs_, {a, y}));
      c.claims.push_back(sum_text(rs_, {pa, x}) + " != " + rs_.format(y));
      v.kind = VerdictKind::Fails;
      v.basis = "certificate";
      v.witness = {x, y};
      v.certificate = std::move(c);
      return v;
    }
  }
  if (covers(radius) && (positive_ || covers(witness_radius))) {
    v.kind = VerdictKind::Holds;
    v.basis = "exhaustive";
  }
  return v;
}

std::optional<Certificate> Analyzer::w12_search(const ExponentVector& a, std::size_t n,
                                                std::uint64_t radius) {
  const auto re = witness_radius_for(radius);
  const auto n1a = rs_.times(static_cast<Coeff>(n + 1), a);
  const auto na = rs_.times(static_cast<Coeff>(n), a);
  for (const auto& b : window(radius).elements()) {
    const auto s = rs_.add(n1a, b);
    const auto t = rs_.add(na, b);
    for (const auto& c : solutions(a, s, re)) {
      if (c == t) continue;
      Certificate cert;
      cert.kind = CertificateKind::W12;
      cert.property = "sr_lower";
      cert.elements = {{"a", a}, {"b", b}, {"c", c}};
      cert.params = {{"n", static_cast<std::int64_t>(n)}};
      cert.claims.push_back(sum_text(rs_, {n1a, b}) + " = " + sum_text(rs_, {a, c}));
      cert.claims.push_back(sum_text(rs_, {na, b}) + " != " + rs_.format(c));
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> Analyzer::certify_sr_lower(const ExponentVector& a_in, std::size_t n,
                                                      std::uint64_t radius) {
  const ExponentVector a = rs_.normal_form(a_in);
  if (auto c = w12_search(a, n, radius)) return c;
  auto v = sr_condition(a, n, radius, witness_radius_for(radius));
  if (v.fails()) return v.certificate;
  return std::nullopt;
}

std::optional<Certificate> Analyzer::certify_sr_infinite(const ExponentVector& a_in,
                                                         std::size_t kmax,
                                                         std::uint64_t radius) {
  const ExponentVector a = rs_.normal_form(a_in);
  if (a.is_zero()) return std::nullopt;
  // A grading with positive weight on a rules out (k+1)a <= ka.
  if (grading_ && (*grading_)(a) > 0) return std::nullopt;
  auto nu = non_unit(a);
  if (!nu) return std::nullopt;
  const auto re = witness_radius_for(radius);
  for (std::size_t k = 1; k <= kmax; ++k) {
    const auto ka = rs_.times(static_cast<Coeff>(k), a);
    const auto k1a = rs_.times(static_cast<Coeff>(k + 1), a);
    auto zs = solutions(k1a, ka, re);
    if (zs.empty()) continue;
    Certificate c;
    c.kind = CertificateKind::PurelyInf;
    c.property = "sr_infinite";
    c.elements = {{"a", a}, {"z", zs.front()}};
    c.params = {{"k", static_cast<std::int64_t>(k)}};
    c.claims.push_back(sum_text(rs_, {k1a, zs.front()}) + " = " + rs_.format(ka));
    c.support.push_back(*nu);
    return c;
  }
  return std::nullopt;
}

SrBracket Analyzer::sr_bracket(const ExponentVector& a_in) {
  const ExponentVector a = rs_.normal_form(a_in);
  SrBracket br;
  if (auto inf = certify_sr_infinite(a, opt_.max_collapse, radius_for(1))) {
    br.infinite = std::move(inf);
    return br;
  }
  for (std::size_t n = 1; n <= opt_.max_n; ++n) {
    const auto r = radius_for(n), re = witness_radius_for(r);
    auto w12 = w12_search(a, n, r);
    if (w12) {
      br.certified_lo = n + 1;
      br.chain.push_back(std::move(*w12));
      continue;
    }
    auto v = sr_condition(a, n, r, re);
    if (v.fails()) {
      br.certified_lo = n + 1;
      br.chain.push_back(std::move(*v.certificate));
      continue;
    }
    if (v.candidate_failure) continue;
    br.empirical_hi = SrBracket::Empirical{n, r, v.holds()};
    break;
  }
  return br;
}

SrBracket Analyzer::sr_plus_bracket(const ExponentVector& a_in) {
  const ExponentVector a = rs_.normal_form(a_in);
  SrBracket br;
  if (auto inf = certify_sr_infinite(a, opt_.max_collapse, radius_for(1))) {
    br.infinite = std::move(inf);
    return br;
  }
  for (std::size_t m = 1; m <= opt_.max_n + 1; ++m) {
    const auto r = radius_for(m), re = witness_radius_for(r);
    auto v = strong_condition(a, m, r, re);
    if (v.fails()) {
      br.certified_lo = m + 1;
      br.chain.push_back(std::move(*v.certificate));
      continue;
    }
    br.empirical_hi = SrBracket::Empirical{m, r, v.holds()};
    break;
  }
  return br;
}

SrklProfile Analyzer::srkl_profile(const ExponentVector& a_in, std::size_t kmax) {
  const ExponentVector a = rs_.normal_form(a_in);
  SrklProfile p;
  p.kmax = kmax;
  p.sr = sr_bracket(a);
  for (std::size_t k = 1; k <= kmax; ++k) {
    p.verdicts.emplace_back();
    const auto r = radius_for(k), re = witness_radius_for(r);
    for (std::size_t l = 1; l <= k; ++l) p.verdicts.back().push_back(srkl_condition(a, k, l, r, re));
  }
  if (p.sr.infinite) return p;
  if (p.sr.empirical_hi) p.m_hi = p.sr.empirical_hi->n - 1;
  for (std::size_t k = 1; k <= kmax; ++k)
    for (std::size_t l = 1; l <= k; ++l) {
      const auto& v = p.verdicts[k - 1][l - 1];
      if (!v.fails() && !v.candidate_failure) {
        if (!p.m_hi || k - l < *p.m_hi) p.m_hi = k - l;
      } else if (v.fails() && p.sr.empirical_hi && k >= p.sr.empirical_hi->n) {
        // sr_{k,l} fails with k >= sr(a), so k - l < m.
        p.m_lo = std::max(p.m_lo, k - l + 1);
        p.m_lo_conditional = true;
      }
    }
  return p;
}

ElementPredicates Analyzer::element_predicates(const ExponentVector& a_in, std::uint64_t radius) {
  const ExponentVector a = rs_.normal_form(a_in);
  const auto re = witness_radius_for(radius);
  ElementPredicates out;
  for (Verdict* v : {&out.cancellative, &out.hermite, &out.self_cancellative}) {
    v->radius = radius;
    v->witness_radius = re;
    v->graded = positive_;
  }
  if (a.is_zero()) {
    for (Verdict* v : {&out.cancellative, &out.hermite, &out.self_cancellative}) {
      v->kind = VerdictKind::Holds;
      v->basis = "exact";
    }
    return out;
  }
  const bool exhaustive = covers(radius) && (positive_ || covers(re));
  const auto a2 = rs_.add(a, a);

  auto fail = [&](Verdict& v, const std::string& property,
                  std::map<std::string, ExponentVector> elems, std::vector<std::string> claims) {
    Certificate c;
    c.kind = CertificateKind::Counterexample;
    c.property = property;
    c.elements = std::move(elems);
    c.claims = std::move(claims);
    v.kind = VerdictKind::Fails;
    v.basis = "certificate";
    for (const auto& [name, e] : c.elements)
      if (name != "a") v.witness.push_back(e);
    v.certificate = std::move(c);
  };

  for (const auto& x : window(radius).elements()) {
    if (!out.cancellative.fails())
      for (const auto& y : solutions(a, rs_.add(a, x), re))
        if (y != x) {
          fail(out.cancellative, "not_cancellative", {{"a", a}, {"x", x}, {"y", y}},
               {sum_text(rs_, {a, x}) + " = " + sum_text(rs_, {a, y}),
                rs_.format(x) + " != " + rs_.format(y)});
          break;
        }
    if (!out.hermite.fails()) {
      const auto t = rs_.add(a, x);
      for (const auto& y : solutions(a, rs_.add(a2, x), re))
        if (y != t) {
          fail(out.hermite, "not_hermite", {{"a", a}, {"x", x}, {"y", y}},
               {sum_text(rs_, {a2, x}) + " = " + sum_text(rs_, {a, y}),
                sum_text(rs_, {a, x}) + " != " + rs_.format(y)});
          break;
        }
    }
    if (out.cancellative.fails() && out.hermite.fails()) break;
  }
  for (const auto& y : solutions(a, a2, re))
    if (y != a) {
      fail(out.self_cancellative, "not_self_cancellative", {{"a", a}, {"y", y}},
           {rs_.format(a2) + " = " + sum_text(rs_, {a, y}), rs_.format(a) + " != " + rs_.format(y)});
      break;
    }
  if (exhaustive) {
    for (Verdict* v : {&out.cancellative, &out.hermite})
      if (!v->fails()) {
        v->kind = VerdictKind::Holds;
        v->basis = "exhaustive";
      }
  }
  if (!out.self_cancellative.fails() && (positive_ || covers(re))) {
    out.self_cancellative.kind = VerdictKind::Holds;
    out.self_cancellative.basis = positive_ ? "grading" : "exhaustive";
  }
  return out;
}

WindowPropertyReport Analyzer::window_property_report(std::uint64_t radius,
                                                      std::uint64_t witness_radius) {
  WindowPropertyReport rep;
  rep.radius = radius;
  rep.witness_radius = witness_radius = std::max(witness_radius, radius);
  for (Verdict* v : {&rep.conical, &rep.stably_finite, &rep.separative, &rep.strongly_separative,
                     &rep.refinement, &rep.simplicity}) {
    v->radius = radius;
    v->witness_radius = witness_radius;
    v->graded = positive_;
  }

  if (covers(radius)) {
    // The whole monoid is explicit: decide everything on its table.
    const auto& fm = *finite_->monoid;
    const auto& el = finite_->elements;
    const auto pr = property_report(fm);
    const auto sr = structure_report(fm);
    auto set = [&](Verdict& v, const Flag& f) {
      v.kind = f.value ? VerdictKind::Holds : VerdictKind::Fails;
      v.basis = "exhaustive";
      for (Elem e : f.witness) v.witness.push_back(el[e]);
    };
    set(rep.conical, pr.conical);
    set(rep.stably_finite, pr.stably_finite);
    set(rep.separative, pr.separative);
    set(rep.strongly_separative, pr.strongly_separative);
    set(rep.refinement, pr.refinement);
    set(rep.simplicity, Flag{sr.simple, {}});
    for (const auto& comp : sr.components) {
      rep.components.emplace_back();
      for (Elem e : comp) rep.components.back().push_back(el[e]);
    }
    return rep;
  }

  const auto& w = window(radius).elements();
  const ExponentVector zero(rs_.rank());
  auto fail = [&](Verdict& v, CertificateKind kind, const std::string& property,
                  std::map<std::string, ExponentVector> elems, std::vector<std::string> claims) {
    Certificate c;
    c.kind = kind;
    c.property = property;
    c.elements = std::move(elems);
    c.claims = std::move(claims);
    if (kind == CertificateKind::GradedSearch) c.grading = *grading_;
    v.kind = VerdictKind::Fails;
    v.basis = "certificate";
    for (const auto& [_, e] : c.elements) v.witness.push_back(e);
    v.certificate = std::move(c);
  };

  // Conical and stably finite follow from a strictly positive grading.
  if (positive_) {
    rep.conical = Verdict::make(VerdictKind::Holds, "grading");
    rep.stably_finite = Verdict::make(VerdictKind::Holds, "grading");
    for (Verdict* v : {&rep.conical, &rep.stably_finite}) {
      v->radius = radius;
      v->witness_radius = witness_radius;
      v->graded = true;
    }
  } else {
    for (const auto& x : w) {
      if (x.is_zero()) continue;
      if (!rep.conical.fails())
        for (const auto& y : solutions(x, zero, witness_radius)) {
          fail(rep.conical, CertificateKind::Counterexample, "not_conical", {{"x", x}, {"y", y}},
               {sum_text(rs_, {x, y}) + " = 0", rs_.format(x) + " != 0"});
          break;
        }
      if (!rep.stably_finite.fails())
        for (const auto& y : solutions(x, x, witness_radius))
          if (!y.is_zero()) {
            fail(rep.stably_finite, CertificateKind::Counterexample, "not_stably_finite",
                 {{"a", x}, {"x", y}},
                 {sum_text(rs_, {x, y}) + " = " + rs_.format(x), rs_.format(y) + " != 0"});
            break;
          }
    }
  }

  std::vector<ExponentVector> doubled;
  for (const auto& x : w) doubled.push_back(rs_.add(x, x));
  for (std::size_t i = 0; i < w.size() && !rep.separative.fails(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (doubled[i] == doubled[j] && rs_.add(w[i], w[j]) == doubled[i]) {
        fail(rep.separative, CertificateKind::Counterexample, "not_separative",
             {{"x", w[i]}, {"y", w[j]}},
             {sum_text(rs_, {w[i], w[i]}) + " = " + sum_text(rs_, {w[i], w[j]}) + " = " +
                  sum_text(rs_, {w[j], w[j]}),
              rs_.format(w[i]) + " != " + rs_.format(w[j])});
        break;
      }
  for (std::size_t i = 0; i < w.size() && !rep.strongly_separative.fails(); ++i)
    for (const auto& y : solutions(w[i], doubled[i], witness_radius))
      if (y != w[i]) {
        fail(rep.strongly_separative, CertificateKind::Counterexample, "not_strongly_separative",
             {{"x", w[i]}, {"y", y}},
             {sum_text(rs_, {w[i], w[i]}) + " = " + sum_text(rs_, {w[i], y}),
              rs_.format(w[i]) + " != " + rs_.format(y)});
        break;
      }

  // Refinement failures are certifiable only when every decomposition can be
  // listed, i.e. under a strictly positive grading.
  if (positive_) {
    auto decompositions = [&](const ExponentVector& s) {
      std::vector<std::pair<ExponentVector, ExponentVector>> out;
      const auto gs = (*grading_)(s);
      for (std::uint64_t g = 0; g <= gs; ++g)
        for (const auto& p : grade_slice(g))
          for (const auto& q : solutions(p, s, witness_radius)) out.emplace_back(p, q);
      return out;
    };
    const std::uint64_t rr = std::min<std::uint64_t>(radius, 8);
    const auto& small = window(rr).elements();
    for (std::size_t i = 0; i < small.size() && !rep.refinement.fails(); ++i)
      for (std::size_t j = i; j < small.size() && !rep.refinement.fails(); ++j) {
        const auto& x1 = small[i];
        const auto& x2 = small[j];
        if (x1.degree() + x2.degree() > rr) continue;
        const auto d1 = decompositions(x1), d2 = decompositions(x2);
        for (const auto& [y1, y2] : decompositions(rs_.add(x1, x2))) {
          bool ok = false;
          for (const auto& [z11, z12] : d1) {
            for (const auto& [z21, z22] : d2)
              if (rs_.add(z11, z21) == y1 && rs_.add(z12, z22) == y2) {
                ok = true;
                break;
              }
            if (ok) break;
          }
          if (!ok) {
            fail(rep.refinement, CertificateKind::GradedSearch, "not_refinement",
                 {{"x1", x1}, {"x2", x2}, {"y1", y1}, {"y2", y2}},
                 {sum_text(rs_, {x1, x2}) + " = " + sum_text(rs_, {y1, y2}),
                  "no 2x2 refinement among elements of bounded grade"});
            break;
          }
        }
      }
  }

  // A generator of grade 0 that is not a unit generates a proper o-ideal
  // missing every generator of positive grade.
  if (grading_ && grading_->support() > 0 && !positive_) {
    const auto& wt = grading_->weights;
    const std::size_t k = rs_.rank();
    for (std::size_t i = 0; i < k && !rep.simplicity.fails(); ++i) {
      if (wt[i] != 0) continue;
      const auto gi = rs_.normal_form(rs_.presentation().generator(i));
      auto nu = non_unit(gi);
      if (!nu) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (wt[j] > 0) {
          const auto gj = rs_.normal_form(rs_.presentation().generator(j));
          fail(rep.simplicity, CertificateKind::GradedSearch, "not_simple", {{"x", gi}, {"y", gj}},
               {"grade(" + rs_.format(gi) + ") = 0 < grade(" + rs_.format(gj) + ")",
                rs_.format(gj) + " is not below any multiple of " + rs_.format(gi)});
          rep.simplicity.certificate->support.push_back(*nu);
          break;
        }
    }
  }

  // Components: x ~ y iff each lies below a multiple of the other.
  std::unordered_map<ExponentVector, std::vector<std::size_t>, ExponentHash> below;
  const auto& wit = window(witness_radius).elements();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& z : wit) below[rs_.add(w[i], z)].push_back(i);
  for (auto& [_, v] : below) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  const std::size_t mmax = 2 * rs_.presentation().max_relation_degree() + 2;
  std::vector<std::vector<char>> le(w.size(), std::vector<char>(w.size(), 0));
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t m = 1; m <= mmax; ++m) {
      auto it = below.find(rs_.times(static_cast<Coeff>(m), w[j]));
      if (it == below.end()) continue;
      for (std::size_t i : it->second) le[i][j] = 1;
    }
  std::vector<std::size_t> parent(w.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (le[i][j] && le[j][i]) {
        auto a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<std::size_t, std::vector<ExponentVector>> groups;
  for (std::size_t i = 0; i < w.size(); ++i) groups[find(i)].push_back(w[i]);
  for (auto& [_, g] : groups) rep.components.push_back(std::move(g));
  return rep;
}

// ---------------------------------------------------------------------------
// Free functions

Verdict sr_condition_window(const RewriteSystem& rs, const ExponentVector& a, std::size_t n,
                            std::uint64_t radius, std::uint64_t witness_radius,
                            const RankOptions& options, bool refinement_mode) {
  Analyzer an(rs, options);
  return an.sr_condition(a, n, radius, std::max(radius, witness_radius), refinement_mode);
}

std::optional<Certificate> certify_sr_lower(const RewriteSystem& rs, const ExponentVector& a,
                                            std::size_t n, std::uint64_t radius,
                                            const RankOptions& options) {
  Analyzer an(rs, options);
  return an.certify_sr_lower(a, n, radius);
}

std::optional<Certificate> certify_sr_infinite(const RewriteSystem& rs, const ExponentVector& a,
                                               std::size_t kmax, std::uint64_t radius,
                                               const RankOptions& options) {
  Analyzer an(rs, options);
  return an.certify_sr_infinite(a, kmax, radius);
}

SrBracket sr_bracket(const RewriteSystem& rs, const ExponentVector& a, const RankOptions& options) {
  Analyzer an(rs, options);
  return an.sr_bracket(a);
}

SrBracket sr_plus_bracket(const RewriteSystem& rs, const ExponentVector& a,
                          const RankOptions& options) {
  Analyzer an(rs, options);
  return an.sr_plus_bracket(a);
}

SrklProfile srkl_profile(const RewriteSystem& rs, const ExponentVector& a, std::size_t kmax,
                         const RankOptions& options) {
  Analyzer an(rs, options);
  return an.srkl_profile(a, kmax);
}

ElementPredicates element_predicates(const RewriteSystem& rs, const ExponentVector& a,
                                     std::uint64_t radius, const RankOptions& options) {
  Analyzer an(rs, options);
  return an.element_predicates(a, radius);
}

WindowPropertyReport window_property_report(const RewriteSystem& rs, std::uint64_t radius,
                                            std::uint64_t witness_radius,
                                            const RankOptions& options) {
  Analyzer an(rs, options);
  return an.window_property_report(radius, witness_radius);
}

}  // namespace srank
