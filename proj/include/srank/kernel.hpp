#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "srank/certificate.hpp"
#include "srank/finite.hpp"
#include "srank/grading.hpp"
#include "srank/rewrite.hpp"

namespace srank {

/// Outcome of closing {0} under generator addition.
struct FiniteDetection {
  /// Present iff the closure has at most `cap` elements. Element i is
  /// `elements[i]`; labels are the formatted normal forms.
  std::optional<FiniteMonoid> monoid;
  std::vector<ExponentVector> elements;
  /// A grading with a positive weight, proving the monoid infinite.
  std::optional<Grading> infinite_by;
  std::size_t cap = 0;

  bool closed() const { return monoid.has_value(); }
  /// Index of a normal form, or npos.
  std::size_t index_of(const ExponentVector& nf) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

FiniteDetection detect_finite(const RewriteSystem& rs, std::size_t cap);

/// True iff W_R already contains every element of the monoid.
/// Irreducible vectors are closed downward, so it suffices that no
/// irreducible vector has degree R + 1.
bool window_is_complete(const RewriteSystem& rs, std::uint64_t radius);

/// A z in W_R with u + z = v, deglex-least, or nothing (no claim).
std::optional<ExponentVector> leq_witness(const RewriteSystem& rs, const ExponentVector& u,
                                          const ExponentVector& v, std::uint64_t radius);

/// Image of a vector under the map generator i -> assignment[i].
Elem hom_image(const FiniteMonoid& target, const std::vector<Elem>& assignment,
               const ExponentVector& v);

struct HomCheck {
  bool valid = false;
  /// Index into the presentation's relation list.
  std::optional<std::size_t> violated_relation;
};

/// Exact: every defining relation maps to an equality in `target`.
/// Throws std::invalid_argument when the assignment does not cover every
/// generator or names an element outside the target.
HomCheck check_hom(const RewriteSystem& rs, const FiniteMonoid& target,
                   const std::vector<Elem>& assignment);

struct UnitarityReport {
  Verdict injective;       // window collision, or exhaustive on finite sources
  Verdict cofinal;         // exact: phi(M) is a finite submonoid of the target
  Verdict weakly_unitary;  // exact, same reason
};

UnitarityReport unitarity_report(const RewriteSystem& rs, const FiniteMonoid& target,
                                 const std::vector<Elem>& assignment, std::uint64_t radius);

}  // namespace srank
