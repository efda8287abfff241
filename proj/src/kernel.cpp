#include "srank/kernel.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace srank {

std::size_t FiniteDetection::index_of(const ExponentVector& nf) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), nf, DeglexLess{});
  if (it == elements.end() || *it != nf) return npos;
  return static_cast<std::size_t>(it - elements.begin());
}

FiniteDetection detect_finite(const RewriteSystem& rs, std::size_t cap) {
  rs.require_confluent();
  FiniteDetection out;
  out.cap = cap;
  if (auto g = find_grading(rs.presentation()); g && g->support() > 0) {
    out.infinite_by = *g;
    return out;
  }

  const std::size_t k = rs.rank();
  std::unordered_map<ExponentVector, std::size_t, ExponentHash> seen;
  std::deque<ExponentVector> queue;
  const ExponentVector zero(k);
  seen.emplace(zero, 0);
  queue.push_back(zero);
  while (!queue.empty()) {
    ExponentVector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < k; ++i) {
      ExponentVector w = v;
      w[i] += 1;
      w = rs.normal_form(std::move(w));
      if (seen.emplace(w, seen.size()).second) {
        if (seen.size() > cap) return out;
        queue.push_back(std::move(w));
      }
    }
  }

  for (const auto& [v, _] : seen) out.elements.push_back(v);
  std::sort(out.elements.begin(), out.elements.end(), DeglexLess{});
  const std::size_t n = out.elements.size();
  std::vector<std::string> labels;
  for (const auto& v : out.elements) labels.push_back(rs.format(v));
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      table[x][y] = table[y][x] = out.index_of(rs.add(out.elements[x], out.elements[y]));
  out.monoid = FiniteMonoid::from_table(std::move(labels), 0, table);
  return out;
}

bool window_is_complete(const RewriteSystem& rs, std::uint64_t radius) {
  rs.require_confluent();
  const auto w = enumerate_window(rs, radius + 1);
  return std::none_of(w.begin(), w.end(), [&](const auto& v) { return v.degree() > radius; });
}

std::optional<ExponentVector> leq_witness(const RewriteSystem& rs, const ExponentVector& u,
                                          const ExponentVector& v, std::uint64_t radius) {
  rs.require_confluent();
  const auto target = rs.normal_form(v);
  for (const auto& z : enumerate_window(rs, radius))
    if (rs.add(u, z) == target) return z;
  return std::nullopt;
}

Elem hom_image(const FiniteMonoid& target, const std::vector<Elem>& assignment,
               const ExponentVector& v) {
  Elem acc = target.zero();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > 0) acc = target.add(acc, target.times(v[i], assignment[i]));
  return acc;
}

HomCheck check_hom(const RewriteSystem& rs, const FiniteMonoid& target,
                   const std::vector<Elem>& assignment) {
  if (assignment.size() != rs.rank())
    throw std::invalid_argument("assignment must give an image for each of the " +
                                std::to_string(rs.rank()) + " generators");
  for (Elem e : assignment)
    if (e >= target.size()) throw std::invalid_argument("assignment names an unknown element");
  const auto& rels = rs.presentation().relations;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (hom_image(target, assignment, rels[i].lhs) != hom_image(target, assignment, rels[i].rhs))
      return {false, i};
  return {true, std::nullopt};
}

UnitarityReport unitarity_report(const RewriteSystem& rs, const FiniteMonoid& target,
                                 const std::vector<Elem>& assignment, std::uint64_t radius) {
  rs.require_confluent();
  if (!check_hom(rs, target, assignment).valid)
    throw std::invalid_argument("assignment does not define a homomorphism");

  // phi(M) is the submonoid generated by the generator images.
  std::vector<char> in_image(target.size(), 0);
  std::deque<Elem> queue{target.zero()};
  in_image[target.zero()] = 1;
  while (!queue.empty()) {
    Elem p = queue.front();
    queue.pop_front();
    for (Elem g : assignment) {
      Elem q = target.add(p, g);
      if (!in_image[q]) {
        in_image[q] = 1;
        queue.push_back(q);
      }
    }
  }

  UnitarityReport r;
  r.cofinal = Verdict::make(VerdictKind::Holds, "exact");
  for (Elem t = 0; t < target.size() && r.cofinal.holds(); ++t) {
    bool dominated = false;
    for (Elem p = 0; p < target.size() && !dominated; ++p)
      dominated = in_image[p] && target.leq(t, p);
    if (!dominated) {
      r.cofinal.kind = VerdictKind::Fails;
      r.cofinal.note = "target element " + target.label(t) + " lies above every image";
    }
  }

  r.weakly_unitary = Verdict::make(VerdictKind::Holds, "exact");
  for (Elem p = 0; p < target.size() && r.weakly_unitary.holds(); ++p) {
    if (!in_image[p]) continue;
    for (Elem z = 0; z < target.size(); ++z) {
      if (in_image[z] || !in_image[target.add(p, z)]) continue;
      r.weakly_unitary.kind = VerdictKind::Fails;
      r.weakly_unitary.note = target.label(p) + " + " + target.label(z) +
                              " lies in the image but " + target.label(z) + " does not";
      break;
    }
  }

  r.injective.radius = radius;
  std::unordered_map<Elem, ExponentVector> first;
  for (const auto& v : enumerate_window(rs, radius)) {
    auto [it, fresh] = first.emplace(hom_image(target, assignment, v), v);
    if (!fresh) {
      r.injective.kind = VerdictKind::Fails;
      r.injective.basis = "exact";
      r.injective.witness = {it->second, v};
      return r;
    }
  }
  if (window_is_complete(rs, radius)) {
    r.injective.kind = VerdictKind::Holds;
    r.injective.basis = "exhaustive";
  }
  return r;
}

}  // namespace srank
