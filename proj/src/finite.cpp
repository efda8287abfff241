#include "srank/finite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace srank {

Elem FiniteMonoid::times(std::size_t m, Elem x) const {
  Elem acc = zero_, base = x;
  while (m > 0) {
    if (m & 1) acc = add(acc, base);
    base = add(base, base);
    m >>= 1;
  }
  return acc;
}

std::optional<Elem> FiniteMonoid::find(const std::string& label) const {
  for (Elem x = 0; x < size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

bool FiniteMonoid::leq(Elem x, Elem y) const {
  for (Elem z = 0; z < size(); ++z)
    if (add(x, z) == y) return true;
  return false;
}

bool FiniteMonoid::is_unit(Elem x) const { return leq(x, zero_); }

std::vector<Elem> FiniteMonoid::units() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size(); ++x)
    if (is_unit(x)) out.push_back(x);
  return out;
}

bool FiniteMonoid::is_group() const { return units().size() == size(); }

CayleyDocument FiniteMonoid::document() const {
  CayleyDocument doc;
  doc.labels = labels_;
  doc.zero = zero_;
  doc.table.assign(size(), std::vector<std::size_t>(size()));
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y) doc.table[x][y] = add(x, y);
  return doc;
}

FiniteMonoid FiniteMonoid::from_table(std::vector<std::string> labels, Elem zero,
                                      const std::vector<std::vector<Elem>>& table) {
  const std::size_t n = labels.size();
  if (n == 0) throw AxiomViolation("nonempty carrier", {}, "no elements");
  if (zero >= n) throw AxiomViolation("range", {zero}, "zero index out of range");
  if (table.size() != n) throw AxiomViolation("range", {}, "table has wrong row count");
  FiniteMonoid m;
  m.table_.resize(n * n);
  for (Elem x = 0; x < n; ++x) {
    if (table[x].size() != n) throw AxiomViolation("range", {x}, "ragged row");
    for (Elem y = 0; y < n; ++y) {
      if (table[x][y] >= n) throw AxiomViolation("range", {x, y}, "entry out of range");
      m.table_[x * n + y] = table[x][y];
    }
  }
  m.labels_ = std::move(labels);
  m.zero_ = zero;
  for (Elem x = 0; x < n; ++x)
    if (m.add(zero, x) != x || m.add(x, zero) != x)
      throw AxiomViolation("identity", {x}, "0 + " + m.labels_[x] + " != " + m.labels_[x]);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (m.add(x, y) != m.add(y, x))
        throw AxiomViolation("commutativity", {x, y},
                             m.labels_[x] + " + " + m.labels_[y] + " is not symmetric");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (m.add(m.add(x, y), z) != m.add(x, m.add(y, z)))
          throw AxiomViolation("associativity", {x, y, z},
                               "(" + m.labels_[x] + " + " + m.labels_[y] + ") + " + m.labels_[z] +
                                   " != " + m.labels_[x] + " + (" + m.labels_[y] + " + " +
                                   m.labels_[z] + ")");
  return m;
}

FiniteMonoid validate(const CayleyDocument& doc) {
  return FiniteMonoid::from_table(doc.labels, doc.zero, doc.table);
}

// ---------------------------------------------------------------------------
// Order structure

namespace {

std::vector<Elem> multiples(const FiniteMonoid& m, Elem x) {
  // {nx : n >= 1}; the orbit is eventually periodic.
  std::vector<Elem> out;
  std::vector<char> seen(m.size(), 0);
  Elem cur = x;
  while (!seen[cur]) {
    seen[cur] = 1;
    out.push_back(cur);
    cur = m.add(cur, x);
  }
  return out;
}

std::vector<Elem> mask_to_list(const std::vector<bool>& mask) {
  std::vector<Elem> out;
  for (Elem x = 0; x < mask.size(); ++x)
    if (mask[x]) out.push_back(x);
  return out;
}

}  // namespace

std::vector<bool> o_ideal_of(const FiniteMonoid& m, Elem x) {
  std::vector<bool> target(m.size(), false);
  for (Elem s : multiples(m, x)) target[s] = true;
  std::vector<bool> out(m.size(), false);
  for (Elem y = 0; y < m.size(); ++y)
    for (Elem z = 0; z < m.size() && !out[y]; ++z)
      if (target[m.add(y, z)]) out[y] = true;
  return out;
}

bool is_o_ideal(const FiniteMonoid& m, const std::vector<bool>& member) {
  if (member.size() != m.size() || !member[m.zero()]) return false;
  for (Elem x = 0; x < m.size(); ++x) {
    if (!member[x]) continue;
    for (Elem y = 0; y < m.size(); ++y) {
      if (member[y] && !member[m.add(x, y)]) return false;
      if (!member[y] && m.leq(y, x)) return false;
    }
  }
  return true;
}

StructureReport structure_report(const FiniteMonoid& m) {
  StructureReport r;
  std::vector<std::vector<bool>> masks;
  for (Elem x = 0; x < m.size(); ++x) {
    masks.push_back(o_ideal_of(m, x));
    r.o_ideals.push_back(mask_to_list(masks.back()));
  }
  std::vector<char> placed(m.size(), 0);
  for (Elem x = 0; x < m.size(); ++x) {
    if (placed[x]) continue;
    std::vector<Elem> comp;
    for (Elem y = x; y < m.size(); ++y)
      if (!placed[y] && masks[y] == masks[x]) {
        placed[y] = 1;
        comp.push_back(y);
      }
    r.components.push_back(std::move(comp));
  }
  // Every o-ideal I of a finite monoid is <s> for s the sum of I, so the
  // principal ones are all of them.
  const auto units = o_ideal_of(m, m.zero());
  const std::vector<bool> all(m.size(), true);
  r.simple = !m.is_group() && std::all_of(masks.begin(), masks.end(), [&](const auto& mk) {
    return mk == units || mk == all;
  });
  return r;
}

// ---------------------------------------------------------------------------
// Properties

PropertyReport property_report(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  PropertyReport r;
  r.units = m.units();
  std::vector<bool> unit(n, false);
  for (Elem u : r.units) unit[u] = true;

  auto fail = [](Flag& f, std::vector<Elem> w) {
    if (f.value) {
      f.value = false;
      f.witness = std::move(w);
    }
  };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (m.add(x, y) == m.zero() && (x != m.zero() || y != m.zero())) fail(r.conical, {x, y});

  for (Elem a = 0; a < n; ++a)
    for (Elem x = 0; x < n; ++x)
      if (m.add(a, x) == a && x != m.zero()) fail(r.stably_finite, {a, x});

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (x != y && m.add(x, z) == m.add(y, z)) fail(r.cancellative, {x, y, z});

  std::vector<std::vector<bool>> ideal;
  for (Elem x = 0; x < n; ++x) ideal.push_back(o_ideal_of(m, x));

  for (Elem x = 0; x < n; ++x) {
    const Elem x2 = m.add(x, x), x3 = m.add(x2, x);
    for (Elem y = 0; y < n; ++y) {
      if (x == y) continue;
      const Elem y2 = m.add(y, y), y3 = m.add(y2, y), xy = m.add(x, y);
      if (x2 == xy && xy == y2) fail(r.separative, {x, y});
      if (x2 == y2 && x3 == y3) fail(r.separative_b, {x, y});
      if (x2 == xy) fail(r.strongly_separative, {x, y});
      for (Elem z = 0; z < n; ++z) {
        if (m.add(x, z) != m.add(y, z)) continue;
        if (ideal[x][z] && ideal[y][z]) fail(r.separative_d, {x, y, z});
        if (ideal[x][z]) fail(r.strongly_separative_c, {x, y, z});
      }
    }
  }

  // (n+1)x = nx + y for n = 1..|M| covers every value of nx.
  for (Elem x = 0; x < n; ++x) {
    Elem nx = x;
    for (std::size_t k = 1; k <= n; ++k) {
      const Elem next = m.add(nx, x);
      for (Elem y = 0; y < n; ++y)
        if (y != x && m.add(nx, y) == next) fail(r.strongly_separative_b, {x, y, k});
      nx = next;
    }
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem xz = m.add(x, z);
        if (m.add(xz, z) == m.add(y, z) && xz != y) fail(r.strongly_separative_d, {x, y, z});
      }

  // Refinement: decompositions of each element, then the 2x2 grid search.
  std::vector<std::vector<std::pair<Elem, Elem>>> dec(n);
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) dec[m.add(p, q)].emplace_back(p, q);
  for (Elem x1 = 0; x1 < n && r.refinement.value; ++x1)
    for (Elem x2 = x1; x2 < n && r.refinement.value; ++x2) {
      const Elem s = m.add(x1, x2);
      for (const auto& [y1, y2] : dec[s]) {
        bool ok = false;
        for (const auto& [z11, z12] : dec[x1]) {
          for (const auto& [z21, z22] : dec[x2])
            if (m.add(z11, z21) == y1 && m.add(z12, z22) == y2) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) {
          fail(r.refinement, {x1, x2, y1, y2});
          break;
        }
      }
    }

  for (Elem a = 0; a < n; ++a) {
    if (unit[a]) continue;
    bool irr = true;
    for (const auto& [b, c] : dec[a])
      if (!unit[b] && !unit[c]) {
        irr = false;
        break;
      }
    if (irr) r.irreducibles.push_back(a);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Congruences and quotients

Congruence::Congruence(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem Congruence::find(Elem x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Congruence::unite(Elem x, Elem y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  // Keep the least element as representative.
  if (y < x) std::swap(x, y);
  parent_[y] = x;
  return true;
}

bool Congruence::merge(const FiniteMonoid& m, Elem x, Elem y) {
  if (same(x, y)) return false;
  std::vector<std::pair<Elem, Elem>> work{{x, y}};
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    if (!unite(p, q)) continue;
    for (Elem z = 0; z < m.size(); ++z) work.emplace_back(m.add(p, z), m.add(q, z));
  }
  return true;
}

std::size_t Congruence::class_count() const {
  std::size_t c = 0;
  for (Elem x = 0; x < parent_.size(); ++x) c += find(x) == x;
  return c;
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> slot(parent_.size(), static_cast<std::size_t>(-1));
  for (Elem x = 0; x < parent_.size(); ++x) {
    Elem r = find(x);
    if (slot[r] == static_cast<std::size_t>(-1)) {
      slot[r] = out.size();
      out.emplace_back();
    }
    out[slot[r]].push_back(x);
  }
  return out;
}

bool Congruence::verify(const FiniteMonoid& m) const {
  if (parent_.size() != m.size()) return false;
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = x + 1; y < m.size(); ++y) {
      if (!same(x, y)) continue;
      for (Elem z = 0; z < m.size(); ++z)
        if (!same(m.add(x, z), m.add(y, z))) return false;
    }
  return true;
}

Quotient quotient_by(const FiniteMonoid& m, const Congruence& c) {
  const auto cls = c.classes();
  std::vector<Elem> proj(m.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (Elem x : cls[i]) proj[x] = i;
    labels.push_back("[" + m.label(cls[i].front()) + "]");
  }
  std::vector<std::vector<Elem>> table(cls.size(), std::vector<Elem>(cls.size()));
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = 0; j < cls.size(); ++j)
      table[i][j] = proj[m.add(cls[i].front(), cls[j].front())];
  auto q = FiniteMonoid::from_table(std::move(labels), proj[m.zero()], table);
  return Quotient{std::move(q), std::move(proj), c};
}

bool quotient_relates(const FiniteMonoid& m, QuotientKind kind, const QuotientParams& params,
                      Elem u, Elem v) {
  switch (kind) {
    case QuotientKind::OIdeal:
      for (Elem a : params.ideal)
        for (Elem b : params.ideal)
          if (m.add(u, a) == m.add(v, b)) return true;
      return false;
    case QuotientKind::MaxAntisymmetric:
      return m.leq(u, v) && m.leq(v, u);
    case QuotientKind::PowerSome:
      // m ranges over k·s for s a generator of S. The pair (k·su, k·sv) is
      // a deterministic orbit, so it suffices to walk it until it repeats.
      for (std::size_t s : params.powers) {
        const Elem su = m.times(s, u), sv = m.times(s, v);
        std::set<std::pair<Elem, Elem>> seen;
        std::pair<Elem, Elem> cur{su, sv};
        while (seen.insert(cur).second) {
          if (cur.first == cur.second) return true;
          cur = {m.add(cur.first, su), m.add(cur.second, sv)};
        }
      }
      return false;
    case QuotientKind::PowerAll:
      return std::all_of(params.powers.begin(), params.powers.end(),
                         [&](std::size_t s) { return m.times(s, u) == m.times(s, v); });
  }
  return false;
}

Quotient quotient(const FiniteMonoid& m, QuotientKind kind, const QuotientParams& params) {
  QuotientParams image_params = params;
  switch (kind) {
    case QuotientKind::OIdeal: {
      std::vector<bool> mask(m.size(), false);
      for (Elem x : params.ideal) {
        if (x >= m.size()) throw std::invalid_argument("params not an o-ideal: element out of range");
        mask[x] = true;
      }
      if (!is_o_ideal(m, mask)) throw std::invalid_argument("params not an o-ideal");
      image_params.ideal = mask_to_list(mask);
      break;
    }
    case QuotientKind::MaxAntisymmetric:
      break;
    case QuotientKind::PowerSome:
      if (params.powers.empty()) throw std::invalid_argument("S empty");
      if (std::find(params.powers.begin(), params.powers.end(), 0u) != params.powers.end())
        throw std::invalid_argument("S must consist of positive integers");
      break;
    case QuotientKind::PowerAll:
      if (params.powers.empty()) throw std::invalid_argument("S empty");
      for (auto s : params.powers)
        if (s < 2) throw std::invalid_argument("S must be a subset of Z>=2");
      break;
  }

  const std::size_t n = m.size();
  const auto& p = kind == QuotientKind::OIdeal ? image_params : params;
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  Congruence c(n);
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v)
      if ((rel[u][v] = quotient_relates(m, kind, p, u, v))) c.merge(m, u, v);

  bool kernel_ok = true;
  for (Elem u = 0; u < n && kernel_ok; ++u)
    for (Elem v = 0; v < n; ++v)
      if (c.same(u, v) != static_cast<bool>(rel[u][v])) {
        kernel_ok = false;
        break;
      }

  Quotient q = quotient_by(m, c);
  q.kernel_matches_relation = kernel_ok;

  QuotientParams qp = p;
  if (kind == QuotientKind::OIdeal) {
    std::set<Elem> img;
    for (Elem x : p.ideal) img.insert(q.projection[x]);
    qp.ideal.assign(img.begin(), img.end());
  }
  bool idem = true;
  for (Elem u = 0; u < q.monoid.size() && idem; ++u)
    for (Elem v = 0; v < q.monoid.size(); ++v)
      if (u != v && quotient_relates(q.monoid, kind, qp, u, v)) {
        idem = false;
        break;
      }
  q.relation_idempotent = idem;
  return q;
}

// ---------------------------------------------------------------------------
// Stable rank

bool sr_condition_finite(const FiniteMonoid& m, Elem a, std::size_t n) {
  const Elem na = m.times(n, a);
  std::vector<Elem> es;
  for (Elem e = 0; e < m.size(); ++e)
    if (m.add(a, e) == na) es.push_back(e);
  for (Elem x = 0; x < m.size(); ++x) {
    const Elem lhs = m.add(na, x);
    for (Elem y = 0; y < m.size(); ++y) {
      if (m.add(a, y) != lhs) continue;
      bool found = std::any_of(es.begin(), es.end(), [&](Elem e) { return m.add(e, x) == y; });
      if (!found) return false;
    }
  }
  return true;
}

bool strong_sr_condition_finite(const FiniteMonoid& m, Elem a, std::size_t n) {
  const Elem na = m.times(n, a), pa = m.times(n - 1, a);
  for (Elem x = 0; x < m.size(); ++x) {
    const Elem lhs = m.add(na, x), target = m.add(pa, x);
    for (Elem y = 0; y < m.size(); ++y)
      if (m.add(a, y) == lhs && target != y) return false;
  }
  return true;
}

FiniteRank sr_exact_finite(const FiniteMonoid& m, Elem a) {
  FiniteRank r;
  const Elem a2 = m.add(a, a);
  for (Elem x = 0; x < m.size() && r.hermite.value; ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (m.add(a2, x) == m.add(a, y) && m.add(a, x) != y) {
        r.hermite = {false, {x, y}};
        break;
      }
  for (Elem y = 0; y < m.size(); ++y)
    if (a2 == m.add(a, y) && a != y) {
      r.self_cancellative = {false, {y}};
      break;
    }

  auto collapse = [&]() -> std::optional<std::pair<std::size_t, Elem>> {
    Elem ka = a;
    for (std::size_t k = 1; k <= m.size() + 1; ++k) {
      const Elem next = m.add(ka, a);
      for (Elem z = 0; z < m.size(); ++z)
        if (m.add(next, z) == ka) return std::make_pair(k, z);
      ka = next;
    }
    return std::nullopt;
  };

  const bool unit = m.is_unit(a);
  for (std::size_t n = 1; n <= m.size() + 2; ++n) {
    if (sr_condition_finite(m, a, n)) {
      r.value = n;
      return r;
    }
    if (!unit) {
      if (auto c = collapse()) {
        r.collapse = c;
        return r;
      }
    }
  }
  throw std::logic_error("sr_exact_finite: orbit of a is not eventually periodic");
}

std::optional<std::size_t> sr_plus_exact_finite(const FiniteMonoid& m, Elem a) {
  const auto sr = sr_exact_finite(m, a);
  if (!sr.value) return std::nullopt;
  for (std::size_t k = 1; k <= *sr.value + 1; ++k)
    if (strong_sr_condition_finite(m, a, k)) return k;
  throw std::logic_error("sr_plus_exact_finite: strong rank exceeds sr + 1");
}

Congruence smallest_sr_plus_congruence(const FiniteMonoid& m,
                                       const std::vector<SrPlusTarget>& targets) {
  for (const auto& t : targets) {
    if (t.bound == 0) throw std::invalid_argument("strong stable rank bound must be >= 1");
    if (t.element >= m.size()) throw std::invalid_argument("target element out of range");
  }
  Congruence c(m.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& t : targets) {
      const Elem mb = m.times(t.bound, t.element), pb = m.times(t.bound - 1, t.element);
      for (Elem x = 0; x < m.size(); ++x)
        for (Elem y = 0; y < m.size(); ++y)
          if (c.same(m.add(mb, x), m.add(t.element, y)) && c.merge(m, m.add(pb, x), y))
            changed = true;
    }
  }
  return c;
}

}  // namespace srank
