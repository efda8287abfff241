#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "srank/finite.hpp"
#include "srank/rank.hpp"
#include "srank/report.hpp"

namespace srank {

/// A declared fact about a fixture. `claim` selects the check:
///   sr, sr_plus           bracket of `subject`; expected is a number or "inf"
///   sr_set                stable ranks of non-unit normal forms; "{2,3,5}"
///   units                 the unit group; "{0,u}"
///   conical, separative, refinement, hermite, self_cancellative, ...
///                         expected "holds" or "fails"
struct Fact {
  std::string claim;
  std::string subject;
  std::string expected;
  /// Stable descriptive identifier of the statement being reproduced.
  std::string anchor;
};

struct Fixture {
  std::string id;
  std::string title;
  /// "cmon" (presentation) or "ctab" (Cayley table).
  std::string format;
  std::string text;
  bool refinement = false;
  bool separative = false;
  /// Smallest uniform search radius at which every fact pins, found by
  /// scanning R = 1, 2, ... The suite itself runs at the default radii.
  std::uint64_t pinning_radius = 0;
  /// Radius used by window property reports and element predicates.
  std::uint64_t property_radius = 8;
  std::string multiples_of;
  std::size_t lmax = 0;
  /// Largest degree of normal forms entering the sr-set; 0 skips it.
  std::uint64_t sr_set_degree = 0;
  /// Elements whose sr and sr+ brackets are reported.
  std::vector<std::string> probes;
  /// Pairs (x, u) with u a unit, asserting sr(x + u) = sr(x).
  std::vector<std::pair<std::string, std::string>> unit_translations;
  std::vector<Fact> facts;

  std::string filename() const { return id + "." + format; }
};

const std::vector<Fixture>& fixture_catalog();
/// Throws std::invalid_argument for unknown ids.
const Fixture& find_fixture(const std::string& id);

/// Outcome of one executable theorem check.
struct Assertion {
  std::string id;
  std::string statement;
  /// "pass", "fail", or "skipped" (some side is not pinned).
  std::string status;
  std::string detail;
};

Json to_json(const Assertion& a);

/// The unit group, exactly: elements of grade 0 closed under zero-weight
/// generators, or the units of the finite monoid. Nullopt if neither applies.
std::optional<std::vector<ExponentVector>> unit_group(Analyzer& an);

struct SrSet {
  std::uint64_t degree = 0;
  std::vector<std::pair<ExponentVector, SrBracket>> elements;
  std::vector<std::size_t> values;  // ascending, pinned finite values
  bool infinite = false;            // some pinned value is infinite
  std::vector<ExponentVector> unpinned;
  std::vector<ExponentVector> unit_status_unknown;

  bool complete() const { return unpinned.empty() && unit_status_unknown.empty(); }
  std::string format() const;
};

/// Stable ranks of the non-unit normal forms of degree <= `degree`.
SrSet sr_set(Analyzer& an, std::uint64_t degree);

struct MultipleRow {
  std::size_t l = 0;
  ExponentVector element;
  SrBracket sr, sr_plus;
  Verdict hermite, self_cancellative, cancellative;
};

struct MultiplesProfile {
  ExponentVector a;
  std::vector<MultipleRow> rows;
  std::vector<Assertion> assertions;
};

/// Brackets and predicates of la for l = 1..lmax, plus the multiples theorems
/// (monotonicity, bracket formula, divisibility case, interval bound,
/// Hermitization, strong/weak consistency and, when `refinement`, the
/// refinement equality) evaluated on pinned values.
MultiplesProfile multiples_profile(Analyzer& an, const ExponentVector& a, std::size_t lmax,
                                   std::uint64_t predicate_radius, bool refinement);

Json to_json(const MultiplesProfile& p, const std::vector<std::string>& generators);

/// One exact law on a finite monoid.
struct LawCheck {
  std::string law;
  bool holds = true;
  std::string detail;
};

/// Exact laws: sr is 1 on units and infinite elsewhere, agreement of the
/// separativity characterizations, validity of every quotient construction
/// with its defining relation trivialized, rank monotonicity under o-ideal
/// quotients, the maximal antisymmetric quotient laws, and conicality of
/// power quotients of conical monoids.
std::vector<LawCheck> finite_laws(const FiniteMonoid& m);

/// A random finite monoid with at most `max_size` elements, obtained as the
/// closure of a random presentation in which every generator has a collapse
/// relation (p + q) g = p g.
FiniteMonoid random_finite_monoid(std::mt19937_64& rng, std::size_t max_size);

struct SuiteOptions {
  /// Fixture ids to run; empty runs the whole catalog.
  std::vector<std::string> only;
  /// Per-fixture uniform radius overrides; absent means default radii.
  std::map<std::string, std::uint64_t> radius;
  /// Random finite monoids checked against the exact laws.
  std::size_t law_samples = 100;
  std::uint64_t seed = 20240611;
  /// Worker threads; 0 reads SRANK_THREADS, defaulting to 1.
  std::size_t threads = 0;
};

/// A certified value contradicts a pinned fact.
class SuiteContradiction : public std::runtime_error {
 public:
  SuiteContradiction(const std::string& what, Json dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}
  const Json& dump() const { return dump_; }

 private:
  Json dump_;
};

struct SuiteResult {
  Json results;
  std::size_t facts = 0, facts_passed = 0, facts_missing = 0, facts_failed = 0;
  std::size_t assertions_failed = 0;
  std::size_t certificates = 0, certificates_rejected = 0;
  std::size_t law_violations = 0;

  bool passed() const {
    return facts_passed == facts && assertions_failed == 0 && certificates_rejected == 0 &&
           law_violations == 0;
  }
};

/// Runs every fixture, its facts and theorem assertions, the certificate
/// audit and the finite-law sample. Deterministic for fixed options.
SuiteResult paper_suite(const SuiteOptions& options = {});

/// Fixture analysis without the law sample; used by paper_suite. Radius 0
/// selects the default per-n radii.
Json run_fixture(const Fixture& f, std::uint64_t radius = 0);

/// Thread count from SRANK_THREADS (>= 1).
std::size_t thread_budget();

}  // namespace srank
