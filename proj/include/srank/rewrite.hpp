#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "srank/exponent.hpp"
#include "srank/presentation.hpp"

namespace srank {

struct Rule {
  ExponentVector lhs, rhs;  // lhs > rhs in deglex
  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Raised by operations that need a confluent system when completion ran out
/// of budget.
class NotConfluentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Completed, inter-reduced system of oriented relations over N^k. When
/// `confluent()` holds, two vectors are equal in the presented monoid iff
/// their normal forms coincide.
class RewriteSystem {
 public:
  RewriteSystem(MonoidPresentation p, std::vector<Rule> rules, bool confluent,
                std::size_t insertions);

  const MonoidPresentation& presentation() const { return pres_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool confluent() const { return confluent_; }
  std::size_t rank() const { return pres_.rank(); }
  /// Rule insertions performed while completing.
  std::size_t insertions() const { return insertions_; }

  /// Throws NotConfluentError unless the system is confluence-verified.
  void require_confluent() const;

  ExponentVector normal_form(ExponentVector v) const;
  bool equal(const ExponentVector& u, const ExponentVector& v) const {
    return normal_form(u) == normal_form(v);
  }
  bool irreducible(const ExponentVector& v) const;
  /// Normal form of u + v.
  ExponentVector add(const ExponentVector& u, const ExponentVector& v) const {
    return normal_form(u + v);
  }
  /// Normal form of m·u.
  ExponentVector times(Coeff m, const ExponentVector& u) const { return normal_form(m * u); }

  std::string format(const ExponentVector& v) const {
    return format_element(v, pres_.generators);
  }

 private:
  MonoidPresentation pres_;
  std::vector<Rule> rules_;
  bool confluent_;
  std::size_t insertions_;
};

inline constexpr std::size_t kDefaultCompletionBudget = 100000;

/// Commutative completion under deglex. Never throws on budget exhaustion;
/// the partial result is returned with `confluent() == false`.
RewriteSystem complete(const MonoidPresentation& p,
                       std::size_t budget = kDefaultCompletionBudget);

/// True iff every critical pair of `rules` joins. Exhaustive.
bool critical_pairs_join(const RewriteSystem& rs);

/// All normal forms of total degree <= radius, deglex-ascending.
std::vector<ExponentVector> enumerate_window(const RewriteSystem& rs, std::uint64_t radius);

/// A window together with an index, for repeated membership lookups.
class Window {
 public:
  Window(const RewriteSystem& rs, std::uint64_t radius);

  std::uint64_t radius() const { return radius_; }
  const std::vector<ExponentVector>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const ExponentVector& operator[](std::size_t i) const { return elems_[i]; }
  /// Index of a normal form in the window, or npos.
  std::size_t find(const ExponentVector& nf) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::uint64_t radius_;
  std::vector<ExponentVector> elems_;
  std::unordered_map<ExponentVector, std::size_t, ExponentHash> index_;
};

}  // namespace srank
