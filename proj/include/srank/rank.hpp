#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srank/certificate.hpp"
#include "srank/finite.hpp"
#include "srank/grading.hpp"
#include "srank/kernel.hpp"
#include "srank/rewrite.hpp"

namespace srank {

/// A named finite monoid used as a refutation target.
struct Target {
  std::string name;
  FiniteMonoid monoid;
};

/// Built-in absorbing targets of size <= max_size: {0,1,...,d,inf}
/// truncations, {0..d} capped sums, Z/m with an adjoined infinity, and
/// max-semilattice chains.
std::vector<Target> builtin_targets(std::size_t max_size = 6);

struct RankOptions {
  /// 0 selects the default 4 * (max relation degree + n).
  std::uint64_t radius = 0;
  /// 0 selects twice the search radius.
  std::uint64_t witness_radius = 0;
  std::size_t target_size = 6;
  std::vector<Target> extra_targets;
  /// Highest n tried by the ascending bracket search.
  std::size_t max_n = 24;
  /// Highest k tried when looking for (k+1)a <= ka.
  std::size_t max_collapse = 24;
  /// The monoid is known to have refinement, enabling the reduced condition.
  bool refinement_declared = false;
};

class RefinementNotDeclared : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SrBracket {
  std::size_t certified_lo = 1;
  /// Certificates supporting certified_lo, strongest last.
  std::vector<Certificate> chain;
  std::optional<Certificate> infinite;
  struct Empirical {
    std::size_t n;
    std::uint64_t radius;
    bool exhaustive;  // the monoid is finite and the window covers it
  };
  std::optional<Empirical> empirical_hi;

  bool consistent() const {
    if (infinite) return !empirical_hi;
    return !empirical_hi || certified_lo <= empirical_hi->n;
  }
  bool pinned() const {
    return infinite.has_value() || (empirical_hi && certified_lo == empirical_hi->n);
  }
  /// Pinned value; nullopt for infinity. Only meaningful when pinned().
  std::optional<std::size_t> value() const {
    if (infinite) return std::nullopt;
    return certified_lo;
  }
};

struct ElementPredicates {
  Verdict cancellative, hermite, self_cancellative;
};

struct WindowPropertyReport {
  std::uint64_t radius = 0, witness_radius = 0;
  Verdict conical, stably_finite, separative, strongly_separative, refinement, simplicity;
  /// Partition of W_R into classes of mutually comparable elements. Classes
  /// may merge beyond the window; this is a refinement of the true partition.
  std::vector<std::vector<ExponentVector>> components;
};

struct SrklProfile {
  std::size_t kmax = 0;
  /// verdicts[k-1][l-1] for 1 <= l <= k <= kmax.
  std::vector<std::vector<Verdict>> verdicts;
  SrBracket sr;
  /// Bracket for m_{a,M}; the lower end assumes the empirical sr upper bound.
  std::size_t m_lo = 0;
  std::optional<std::size_t> m_hi;
  bool m_lo_conditional = false;
};

/// Caches windows, gradings and valid finite images for one rewrite system.
class Analyzer {
 public:
  explicit Analyzer(const RewriteSystem& rs, RankOptions options = {});
  Analyzer(const Analyzer&) = delete;
  Analyzer& operator=(const Analyzer&) = delete;

  const RewriteSystem& rs() const { return rs_; }
  const RankOptions& options() const { return opt_; }
  const std::optional<Grading>& grading() const { return grading_; }
  /// The grading has a strictly positive weight on every generator.
  bool positively_graded() const { return positive_; }
  /// Present when the monoid is finite (closure found within 4096 elements).
  const std::optional<FiniteDetection>& finite() const { return finite_; }

  std::uint64_t radius_for(std::size_t n) const;
  std::uint64_t witness_radius_for(std::uint64_t radius) const;

  const Window& window(std::uint64_t radius);
  /// Every normal form of the given grade; requires positively_graded().
  const std::vector<ExponentVector>& grade_slice(std::uint64_t grade);
  /// True iff W_R contains every element of the monoid.
  bool covers(std::uint64_t radius) const;

  // Certificates.
  std::optional<Certificate> non_unit(const ExponentVector& a);
  std::optional<Certificate> refute(const ExponentVector& a, std::size_t k, std::size_t l,
                                    const ExponentVector& x, const ExponentVector& y);
  std::optional<Certificate> certify_sr_lower(const ExponentVector& a, std::size_t n,
                                              std::uint64_t radius);
  std::optional<Certificate> certify_sr_infinite(const ExponentVector& a, std::size_t kmax,
                                                 std::uint64_t radius);

  // Verdicts.
  Verdict srkl_condition(const ExponentVector& a, std::size_t k, std::size_t l,
                         std::uint64_t radius, std::uint64_t witness_radius);
  Verdict sr_condition(const ExponentVector& a, std::size_t n, std::uint64_t radius,
                       std::uint64_t witness_radius, bool refinement_mode = false);
  Verdict strong_condition(const ExponentVector& a, std::size_t m, std::uint64_t radius,
                           std::uint64_t witness_radius);

  SrBracket sr_bracket(const ExponentVector& a);
  SrBracket sr_plus_bracket(const ExponentVector& a);
  SrklProfile srkl_profile(const ExponentVector& a, std::size_t kmax);
  ElementPredicates element_predicates(const ExponentVector& a, std::uint64_t radius);
  WindowPropertyReport window_property_report(std::uint64_t radius, std::uint64_t witness_radius);

  /// Elements y in the witness window (or grade slice) with l·a + y = s.
  std::vector<ExponentVector> solutions(const ExponentVector& la, const ExponentVector& s,
                                        std::uint64_t witness_radius);

 private:
  struct ValidHom {
    const Target* target;
    std::vector<Elem> assignment;
  };
  const std::vector<ValidHom>& homs();
  std::optional<Certificate> w12_search(const ExponentVector& a, std::size_t n,
                                        std::uint64_t radius);

  const RewriteSystem& rs_;
  RankOptions opt_;
  std::optional<Grading> grading_;
  bool positive_ = false;
  std::optional<FiniteDetection> finite_;
  std::uint64_t finite_degree_ = 0;
  std::vector<Target> targets_;
  std::optional<std::vector<ValidHom>> homs_;
  std::map<std::uint64_t, std::unique_ptr<Window>> windows_;
  std::map<std::uint64_t, std::vector<ExponentVector>> slices_;
};

// Free-function forms; each builds a fresh Analyzer.
Verdict sr_condition_window(const RewriteSystem& rs, const ExponentVector& a, std::size_t n,
                            std::uint64_t radius, std::uint64_t witness_radius,
                            const RankOptions& options = {}, bool refinement_mode = false);
std::optional<Certificate> certify_sr_lower(const RewriteSystem& rs, const ExponentVector& a,
                                            std::size_t n, std::uint64_t radius,
                                            const RankOptions& options = {});
std::optional<Certificate> certify_sr_infinite(const RewriteSystem& rs, const ExponentVector& a,
                                               std::size_t kmax, std::uint64_t radius,
                                               const RankOptions& options = {});
SrBracket sr_bracket(const RewriteSystem& rs, const ExponentVector& a,
                     const RankOptions& options = {});
SrBracket sr_plus_bracket(const RewriteSystem& rs, const ExponentVector& a,
                          const RankOptions& options = {});
SrklProfile srkl_profile(const RewriteSystem& rs, const ExponentVector& a, std::size_t kmax,
                         const RankOptions& options = {});
ElementPredicates element_predicates(const RewriteSystem& rs, const ExponentVector& a,
                                     std::uint64_t radius, const RankOptions& options = {});
WindowPropertyReport window_property_report(const RewriteSystem& rs, std::uint64_t radius,
                                            std::uint64_t witness_radius,
                                            const RankOptions& options = {});

}  // namespace srank
