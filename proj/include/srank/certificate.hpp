#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srank/exponent.hpp"
#include "srank/finite.hpp"
#include "srank/grading.hpp"

namespace srank {

enum class CertificateKind {
  W12,             // (n+1)a + b = a + c with na + b != c
  PurelyInf,       // (k+1)a + z = ka for a non-unit a
  Refutation,      // finite image in which no e exists
  GradedSearch,    // exhaustive search bounded by a positive grading
  Counterexample,  // direct normal-form equalities and inequalities
  NonUnit,         // grading or finite image showing a is not a unit
};

const char* to_string(CertificateKind k);
std::optional<CertificateKind> certificate_kind_from_string(const std::string& s);

/// Homomorphism into an explicit finite monoid.
struct HomData {
  std::string target_name;
  FiniteMonoid target;
  std::vector<Elem> assignment;  // generator index -> target element
};

/// Re-checkable evidence. `property` names what is proved:
///
///   sr_lower               W12              sr(a) >= n + 1
///   srkl_fails             Refutation,      sr_{k,l}[a] fails (for l = 1:
///                          GradedSearch     sr(a) >= k + 1)
///   sr_infinite            PurelyInf        sr(a) = infinity
///   non_unit               NonUnit          a is not a unit
///   strong_sr_fails        Counterexample   sr+(a) >= m + 1
///   not_hermite, not_self_cancellative, not_cancellative, not_separative,
///   not_strongly_separative, not_conical, not_stably_finite
///                          Counterexample
///   not_refinement         GradedSearch
///   not_simple             GradedSearch     <x> is a proper nontrivial o-ideal
struct Certificate {
  CertificateKind kind = CertificateKind::Counterexample;
  std::string property;
  std::map<std::string, ExponentVector> elements;
  std::map<std::string, std::int64_t> params;
  std::optional<HomData> hom;
  std::optional<Grading> grading;
  std::vector<std::string> claims;
  std::vector<Certificate> support;

  std::int64_t param(const std::string& key) const {
    auto it = params.find(key);
    return it == params.end() ? 0 : it->second;
  }
  const ExponentVector& element(const std::string& key) const { return elements.at(key); }
};

enum class VerdictKind { Holds, Fails, UnknownUpTo };

const char* to_string(VerdictKind k);

/// Three-valued outcome. Holds and Fails always carry evidence; UnknownUpTo
/// records the window that was searched.
struct Verdict {
  VerdictKind kind = VerdictKind::UnknownUpTo;
  /// exhaustive, certificate, grading, window, exact
  std::string basis = "window";
  std::uint64_t radius = 0;
  std::uint64_t witness_radius = 0;
  /// Smallest failing instance seen, certified or not.
  std::vector<ExponentVector> witness;
  std::optional<Certificate> certificate;
  /// A failing instance was seen in the window but could not be certified.
  bool candidate_failure = false;
  /// Existential searches were complete thanks to a positive grading.
  bool graded = false;
  std::string note;

  static Verdict make(VerdictKind k, std::string basis) {
    Verdict v;
    v.kind = k;
    v.basis = std::move(basis);
    return v;
  }

  bool holds() const { return kind == VerdictKind::Holds; }
  bool fails() const { return kind == VerdictKind::Fails; }
  bool unknown() const { return kind == VerdictKind::UnknownUpTo; }
};

}  // namespace srank
