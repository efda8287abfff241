#pragma once

// Test-only reference implementations. Nothing here calls into the search
// or decision code of the library; only the data types and the table-based
// addition of FiniteMonoid are shared.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "srank/exponent.hpp"
#include "srank/finite.hpp"
#include "srank/presentation.hpp"

namespace oracle {

using srank::Elem;
using srank::ExponentVector;
using srank::FiniteMonoid;
using srank::MonoidPresentation;

enum class Answer { Equal, NotEqual, Inconclusive };

struct BfsLimits {
  std::size_t depth = 12;
  std::uint64_t max_degree = 14;
  std::size_t max_nodes = 20000;
};

/// The part of u's congruence class reachable by single relation
/// applications in either direction within the limits. `truncated` is false
/// exactly when the whole class was enumerated.
struct BfsClass {
  std::set<std::vector<srank::Coeff>> members;
  bool truncated = false;

  bool contains(const ExponentVector& v) const { return members.count(v.raw()) > 0; }
};

inline BfsClass bfs_class(const MonoidPresentation& p, const ExponentVector& u, const BfsLimits& lim = {}) {
  BfsClass out;
  out.members.insert(u.raw());
  std::deque<std::pair<ExponentVector, std::size_t>> queue{{u, 0}};
  while (!queue.empty()) {
    auto [w, d] = queue.front();
    queue.pop_front();
    for (const auto& r : p.relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const auto& from = dir ? r.rhs : r.lhs;
        const auto& to = dir ? r.lhs : r.rhs;
        bool fits = true;
        for (std::size_t i = 0; i < w.size(); ++i) fits &= from[i] <= w[i];
        if (!fits) continue;
        ExponentVector next = w;
        for (std::size_t i = 0; i < w.size(); ++i) next[i] = w[i] - from[i] + to[i];
        if (out.members.count(next.raw())) continue;
        if (d + 1 > lim.depth || next.degree() > lim.max_degree || out.members.size() >= lim.max_nodes) {
          out.truncated = true;
          continue;
        }
        out.members.insert(next.raw());
        queue.emplace_back(std::move(next), d + 1);
      }
    }
  }
  return out;
}

inline Answer judge(const BfsClass& c, const ExponentVector& v) {
  if (c.contains(v)) return Answer::Equal;
  return c.truncated ? Answer::Inconclusive : Answer::NotEqual;
}

/// Equal when v is reached from u; NotEqual only when u's class was closed
/// without touching any limit.
inline Answer bfs_equal(const MonoidPresentation& p, const ExponentVector& u, const ExponentVector& v,
                        const BfsLimits& lim = {}) {
  return judge(bfs_class(p, u, lim), v);
}

inline Elem times(const FiniteMonoid& m, std::size_t n, Elem a) {
  Elem s = m.zero();
  for (std::size_t i = 0; i < n; ++i) s = m.add(s, a);
  return s;
}

/// The n-stable rank condition, read off the definition.
inline bool sr_condition(const FiniteMonoid& m, Elem a, std::size_t n) {
  const Elem na = times(m, n, a);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y) {
      if (m.add(na, x) != m.add(a, y)) continue;
      bool found = false;
      for (Elem e = 0; e < m.size() && !found; ++e) found = m.add(a, e) == na && m.add(e, x) == y;
      if (!found) return false;
    }
  return true;
}

inline bool strong_condition(const FiniteMonoid& m, Elem a, std::size_t n) {
  const Elem na = times(m, n, a), n1a = times(m, n - 1, a);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (m.add(na, x) == m.add(a, y) && m.add(n1a, x) != y) return false;
  return true;
}

/// Least n <= bound satisfying `cond`; nullopt reads as infinity. Multiples of
/// a are eventually periodic with preperiod and period at most |M|, so
/// bound = 3|M| decides.
inline std::optional<std::size_t> least(const FiniteMonoid& m, Elem a,
                                        bool (*cond)(const FiniteMonoid&, Elem, std::size_t)) {
  for (std::size_t n = 1; n <= 3 * m.size(); ++n)
    if (cond(m, a, n)) return n;
  return std::nullopt;
}

inline std::optional<std::size_t> sr(const FiniteMonoid& m, Elem a) { return least(m, a, sr_condition); }
inline std::optional<std::size_t> sr_plus(const FiniteMonoid& m, Elem a) {
  return least(m, a, strong_condition);
}

inline bool is_unit(const FiniteMonoid& m, Elem a) {
  for (Elem b = 0; b < m.size(); ++b)
    if (m.add(a, b) == m.zero()) return true;
  return false;
}

/// A partition as a class id per element, canonical by first occurrence.
using Partition = std::vector<std::size_t>;

inline void for_each_partition(std::size_t n, const std::function<void(const Partition&)>& f) {
  Partition p(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      f(p);
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      p[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0)
    f(p);
  else
    rec(0, 0);
}

inline bool is_congruence(const FiniteMonoid& m, const Partition& p) {
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = x + 1; y < m.size(); ++y)
      if (p[x] == p[y])
        for (Elem z = 0; z < m.size(); ++z)
          if (p[m.add(x, z)] != p[m.add(y, z)]) return false;
  return true;
}

inline bool finer_or_equal(const Partition& a, const Partition& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y)
      if (a[x] == a[y] && b[x] != b[y]) return false;
  return true;
}

/// Strong m-stable rank condition for the class of a in M / p.
inline bool quotient_strong_condition(const FiniteMonoid& m, const Partition& p, Elem a, std::size_t n) {
  const Elem na = times(m, n, a), n1a = times(m, n - 1, a);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y = 0; y < m.size(); ++y)
      if (p[m.add(na, x)] == p[m.add(a, y)] && p[m.add(n1a, x)] != p[y]) return false;
  return true;
}

struct Target {
  Elem element;
  std::size_t bound;
};

/// Every congruence on M whose quotient meets all targets.
inline std::vector<Partition> satisfying_congruences(const FiniteMonoid& m, const std::vector<Target>& ts) {
  std::vector<Partition> out;
  for_each_partition(m.size(), [&](const Partition& p) {
    if (!is_congruence(m, p)) return;
    for (const auto& t : ts) {
      bool ok = false;
      for (std::size_t n = 1; n <= t.bound && !ok; ++n) ok = quotient_strong_condition(m, p, t.element, n);
      if (!ok) return;
    }
    out.push_back(p);
  });
  return out;
}

/// The member finer than every other member, if one exists.
inline std::optional<Partition> least_member(const std::vector<Partition>& ps) {
  for (const auto& p : ps)
    if (std::all_of(ps.begin(), ps.end(), [&](const Partition& q) { return finer_or_equal(p, q); })) return p;
  return std::nullopt;
}

}  // namespace oracle
