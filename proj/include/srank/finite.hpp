#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srank/presentation.hpp"

namespace srank {

using Elem = std::size_t;

/// An axiom of commutative monoids failed; `witness` holds the offending
/// elements (a triple for associativity).
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(const std::string& axiom, std::vector<Elem> witness, const std::string& detail)
      : std::runtime_error(axiom + " violated: " + detail),
        axiom_(axiom),
        witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::vector<Elem>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<Elem> witness_;
};

/// Explicit commutative monoid given by its addition table. Instances are
/// only produced by `validate` or by internal constructions that preserve the
/// axioms, so every instance is a genuine commutative monoid.
class FiniteMonoid {
 public:
  std::size_t size() const { return labels_.size(); }
  Elem zero() const { return zero_; }
  Elem add(Elem x, Elem y) const { return table_[x * size() + y]; }
  Elem times(std::size_t m, Elem x) const;
  const std::string& label(Elem x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(const std::string& label) const;

  /// x <= y in the algebraic order.
  bool leq(Elem x, Elem y) const;
  bool is_unit(Elem x) const;
  std::vector<Elem> units() const;
  bool is_group() const;

  CayleyDocument document() const;

  /// Build from raw parts, checking every axiom exhaustively.
  static FiniteMonoid from_table(std::vector<std::string> labels, Elem zero,
                                 const std::vector<std::vector<Elem>>& table);

 private:
  FiniteMonoid() = default;
  std::vector<std::string> labels_;
  Elem zero_ = 0;
  std::vector<Elem> table_;
};

/// Range, identity, commutativity and associativity (O(n^3)).
FiniteMonoid validate(const CayleyDocument& doc);

/// Exact boolean with a counterexample when false.
struct Flag {
  bool value = true;
  std::vector<Elem> witness;
};

struct PropertyReport {
  std::vector<Elem> units;
  Flag conical;
  Flag stably_finite;
  Flag separative;                 // 2x = x+y = 2y => x = y
  Flag separative_b;               // 2x = 2y, 3x = 3y => x = y
  Flag separative_d;               // x+z = y+z, z in <x> ∩ <y> => x = y
  Flag strongly_separative;        // 2x = x+y => x = y
  Flag strongly_separative_b;      // (n+1)x = nx+y => x = y
  Flag strongly_separative_c;      // x+z = y+z, z in <x> => x = y
  Flag strongly_separative_d;      // x+2z = y+z => x+z = y
  Flag refinement;
  Flag cancellative;
  std::vector<Elem> irreducibles;

  bool separativity_characterizations_agree() const {
    return separative.value == separative_b.value && separative.value == separative_d.value;
  }
  bool strong_separativity_characterizations_agree() const {
    return strongly_separative.value == strongly_separative_b.value &&
           strongly_separative.value == strongly_separative_c.value &&
           strongly_separative.value == strongly_separative_d.value;
  }
};

PropertyReport property_report(const FiniteMonoid& m);

/// <x> = { y | y <= nx for some n >= 1 }, as a membership mask.
std::vector<bool> o_ideal_of(const FiniteMonoid& m, Elem x);
bool is_o_ideal(const FiniteMonoid& m, const std::vector<bool>& member);

struct StructureReport {
  std::vector<std::vector<Elem>> o_ideals;    // <x> for each x
  std::vector<std::vector<Elem>> components;  // archimedean components
  bool simple = false;
};

StructureReport structure_report(const FiniteMonoid& m);

/// Union-find partition closed under translation.
class Congruence {
 public:
  explicit Congruence(std::size_t n);

  Elem find(Elem x) const;
  bool same(Elem x, Elem y) const { return find(x) == find(y); }
  /// Identify x and y and close under translation and transitivity.
  /// Returns false when they were already identified.
  bool merge(const FiniteMonoid& m, Elem x, Elem y);
  std::size_t class_count() const;
  /// Classes as sorted element lists, ordered by least member.
  std::vector<std::vector<Elem>> classes() const;
  bool is_identity() const { return class_count() == parent_.size(); }
  /// Equivalence + additivity, checked exhaustively.
  bool verify(const FiniteMonoid& m) const;
  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.classes() == b.classes();
  }

 private:
  bool unite(Elem x, Elem y);
  mutable std::vector<Elem> parent_;
};

enum class QuotientKind { OIdeal, MaxAntisymmetric, PowerSome, PowerAll };

struct QuotientParams {
  std::vector<Elem> ideal;            // OIdeal
  std::vector<std::size_t> powers;    // PowerSome: generators of S; PowerAll: S itself
};

struct Quotient {
  FiniteMonoid monoid;
  std::vector<Elem> projection;
  Congruence congruence;
  /// Every pair related by the defining rule is identified and nothing else.
  bool kernel_matches_relation = false;
  /// The defining rule recomputed on the quotient is plain equality.
  bool relation_idempotent = false;
};

/// The defining relation of each kind, as a predicate on pairs.
bool quotient_relates(const FiniteMonoid& m, QuotientKind kind, const QuotientParams& params,
                      Elem u, Elem v);

Quotient quotient(const FiniteMonoid& m, QuotientKind kind, const QuotientParams& params);

/// n-stable rank condition for a, exhaustively.
bool sr_condition_finite(const FiniteMonoid& m, Elem a, std::size_t n);
/// Strong m-stable rank condition for a, exhaustively.
bool strong_sr_condition_finite(const FiniteMonoid& m, Elem a, std::size_t n);

struct FiniteRank {
  std::optional<std::size_t> value;  // nullopt = infinite
  // (k, z) with (k+1)a + z = ka when value is infinite.
  std::optional<std::pair<std::size_t, Elem>> collapse;
  Flag hermite;            // witness (x, y): 2a+x = a+y, a+x != y
  Flag self_cancellative;  // witness (y): 2a = a+y, a != y
};

FiniteRank sr_exact_finite(const FiniteMonoid& m, Elem a);
std::optional<std::size_t> sr_plus_exact_finite(const FiniteMonoid& m, Elem a);

struct SrPlusTarget {
  Elem element;
  std::size_t bound;
};

/// Least congruence whose quotient gives each target strong stable rank at
/// most its bound.
Congruence smallest_sr_plus_congruence(const FiniteMonoid& m,
                                       const std::vector<SrPlusTarget>& targets);

/// Quotient monoid for an arbitrary congruence.
Quotient quotient_by(const FiniteMonoid& m, const Congruence& c);

}  // namespace srank
