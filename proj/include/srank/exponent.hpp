#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace srank {

using Coeff = std::uint32_t;

/// A formal sum of generators with nonnegative coefficients, i.e. an element
/// of the free commutative monoid N^k. Coordinate i is the coefficient of
/// generator i in presentation order.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t k) : c_(k, 0) {}
  ExponentVector(std::initializer_list<Coeff> init) : c_(init) {}
  explicit ExponentVector(std::vector<Coeff> coords) : c_(std::move(coords)) {}

  static ExponentVector unit(std::size_t k, std::size_t i, Coeff times = 1) {
    ExponentVector v(k);
    v.c_[i] = times;
    return v;
  }

  std::size_t size() const { return c_.size(); }
  Coeff operator[](std::size_t i) const { return c_[i]; }
  Coeff& operator[](std::size_t i) { return c_[i]; }
  std::span<const Coeff> coords() const { return c_; }
  const std::vector<Coeff>& raw() const { return c_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (Coeff x : c_) d += x;
    return d;
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](Coeff x) { return x == 0; });
  }

  /// Componentwise <=, i.e. `*this` divides `other` as a monomial.
  bool divides(const ExponentVector& other) const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] > other.c_[i]) return false;
    return true;
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a += b;
    return a;
  }
  /// Requires `o.divides(*this)`.
  ExponentVector& operator-=(const ExponentVector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    a -= b;
    return a;
  }
  friend ExponentVector operator*(Coeff m, ExponentVector v) {
    for (auto& x : v.c_) x *= m;
    return v;
  }

  static ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c_[i] = std::max(a.c_[i], b.c_[i]);
    return r;
  }
  static ExponentVector meet(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.c_[i] = std::min(a.c_[i], b.c_[i]);
    return r;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Coeff> c_;
};

/// Degree-lexicographic comparison; at equal degree the earlier generator is
/// more significant. This is the admissible term order used everywhere.
inline std::strong_ordering deglex(const ExponentVector& a, const ExponentVector& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

struct DeglexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return deglex(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentVector& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Coeff x : v.coords()) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace srank
