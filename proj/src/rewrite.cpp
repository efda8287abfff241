#include "srank/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace srank {

namespace {

/// Rewrite `v` to normal form with the rules for which `alive(i)` holds.
/// A rule l -> r is applied t times at once where t is the largest multiple
/// of l dividing v; each intermediate step is a legal single application.
template <class Alive>
ExponentVector reduce(ExponentVector v, const std::vector<Rule>& rules, Alive alive) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!alive(i)) continue;
      const auto& l = rules[i].lhs;
      if (!l.divides(v)) continue;
      Coeff t = std::numeric_limits<Coeff>::max();
      for (std::size_t c = 0; c < v.size(); ++c)
        if (l[c] > 0) t = std::min<Coeff>(t, v[c] / l[c]);
      const auto& r = rules[i].rhs;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] = v[c] - t * l[c] + t * r[c];
      changed = true;
      break;
    }
    if (!changed) return v;
  }
}

Rule orient(ExponentVector u, ExponentVector v) {
  if (deglex(u, v) < 0) std::swap(u, v);
  return {std::move(u), std::move(v)};
}

/// The two one-step reducts of the overlap of rules a and b, or nothing when
/// their left sides share no generator (such pairs always join).
bool overlap(const Rule& a, const Rule& b, ExponentVector& s1, ExponentVector& s2) {
  if (ExponentVector::meet(a.lhs, b.lhs).is_zero()) return false;
  ExponentVector m = ExponentVector::join(a.lhs, b.lhs);
  s1 = m - a.lhs + a.rhs;
  s2 = m - b.lhs + b.rhs;
  return true;
}

}  // namespace

RewriteSystem::RewriteSystem(MonoidPresentation p, std::vector<Rule> rules, bool confluent,
                             std::size_t insertions)
    : pres_(std::move(p)), rules_(std::move(rules)), confluent_(confluent), insertions_(insertions) {}

void RewriteSystem::require_confluent() const {
  if (!confluent_)
    throw NotConfluentError("completion budget exhausted: rewrite system is not confluent");
}

ExponentVector RewriteSystem::normal_form(ExponentVector v) const {
  return reduce(std::move(v), rules_, [](std::size_t) { return true; });
}

bool RewriteSystem::irreducible(const ExponentVector& v) const {
  return std::none_of(rules_.begin(), rules_.end(),
                      [&](const Rule& r) { return r.lhs.divides(v); });
}

RewriteSystem complete(const MonoidPresentation& p, std::size_t budget) {
  std::vector<Rule> rules;
  std::vector<char> alive;
  std::deque<std::pair<ExponentVector, ExponentVector>> pending;
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& r : p.relations) pending.emplace_back(r.lhs, r.rhs);

  auto is_alive = [&](std::size_t i) { return alive[i] != 0; };
  auto nf = [&](ExponentVector v) { return reduce(std::move(v), rules, is_alive); };

  std::size_t insertions = 0;
  bool exhausted = false;

  for (;;) {
    while (!pending.empty() && !exhausted) {
      auto [u, v] = std::move(pending.front());
      pending.pop_front();
      u = nf(std::move(u));
      v = nf(std::move(v));
      if (u == v) continue;
      if (++insertions > budget) {
        exhausted = true;
        break;
      }
      Rule rule = orient(std::move(u), std::move(v));
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (alive[j] && rule.lhs.divides(rules[j].lhs)) {
          alive[j] = 0;
          pending.emplace_back(rules[j].lhs, rules[j].rhs);
        }
      }
      const std::size_t id = rules.size();
      rules.push_back(std::move(rule));
      alive.push_back(1);
      for (std::size_t j = 0; j < id; ++j)
        if (alive[j]) pairs.emplace_back(j, id);
    }
    if (exhausted) break;

    if (!pairs.empty()) {
      auto [i, j] = pairs.front();
      pairs.pop_front();
      if (!alive[i] || !alive[j]) continue;
      ExponentVector s1, s2;
      if (overlap(rules[i], rules[j], s1, s2)) pending.emplace_back(std::move(s1), std::move(s2));
      continue;
    }

    // Queue drained: sweep every pair of surviving rules once more so that
    // pairs lost to collapsed rules are reconsidered.
    bool all_join = true;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (!alive[i]) continue;
      for (std::size_t j = i + 1; j < rules.size(); ++j) {
        if (!alive[j]) continue;
        ExponentVector s1, s2;
        if (!overlap(rules[i], rules[j], s1, s2)) continue;
        s1 = nf(std::move(s1));
        s2 = nf(std::move(s2));
        if (s1 != s2) {
          all_join = false;
          pending.emplace_back(std::move(s1), std::move(s2));
        }
      }
    }
    if (all_join) break;
  }

  std::vector<Rule> final_rules;
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (alive[i]) final_rules.push_back(rules[i]);
  // Inter-reduce right sides against the final set.
  for (auto& r : final_rules)
    r.rhs = reduce(std::move(r.rhs), final_rules, [](std::size_t) { return true; });
  std::sort(final_rules.begin(), final_rules.end(),
            [](const Rule& a, const Rule& b) { return deglex(a.lhs, b.lhs) < 0; });

  RewriteSystem rs(p, std::move(final_rules), false, insertions);
  if (exhausted) return rs;
  bool ok = critical_pairs_join(rs);
  return RewriteSystem(p, rs.rules(), ok, insertions);
}

bool critical_pairs_join(const RewriteSystem& rs) {
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (deglex(rules[i].lhs, rules[i].rhs) <= 0) return false;
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      ExponentVector s1, s2;
      if (!overlap(rules[i], rules[j], s1, s2)) continue;
      if (rs.normal_form(std::move(s1)) != rs.normal_form(std::move(s2))) return false;
    }
  }
  return true;
}

std::vector<ExponentVector> enumerate_window(const RewriteSystem& rs, std::uint64_t radius) {
  const std::size_t k = rs.rank();
  std::vector<ExponentVector> out;
  ExponentVector cur(k);
  // Depth-first over coordinates; irreducibility is downward closed, so a
  // reducible prefix (with remaining coordinates zero) prunes its extensions.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == k) {
      if (rs.irreducible(cur)) out.push_back(cur);
      return;
    }
    for (Coeff c = 0; c <= left; ++c) {
      cur[i] = c;
      if (!rs.irreducible(cur)) break;
      self(self, i + 1, left - c);
    }
    cur[i] = 0;
  };
  rec(rec, 0, radius);
  std::sort(out.begin(), out.end(), DeglexLess{});
  return out;
}

Window::Window(const RewriteSystem& rs, std::uint64_t radius)
    : radius_(radius), elems_(enumerate_window(rs, radius)) {
  index_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], i);
}

std::size_t Window::find(const ExponentVector& nf) const {
  auto it = index_.find(nf);
  return it == index_.end() ? npos : it->second;
}

}  // namespace srank
