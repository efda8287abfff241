#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srank/exponent.hpp"
#include "srank/presentation.hpp"

namespace srank {

/// Generator weights inducing a homomorphism into (N, +).
struct Grading {
  std::vector<std::uint64_t> weights;

  std::uint64_t operator()(const ExponentVector& v) const {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) g += weights[i] * v[i];
    return g;
  }
  bool strictly_positive() const {
    for (auto w : weights)
      if (w == 0) return false;
    return !weights.empty();
  }
  std::size_t support() const {
    std::size_t s = 0;
    for (auto w : weights) s += w != 0;
    return s;
  }
  std::uint64_t min_positive_weight() const;
  /// True iff u·w = v·w for every relation of p.
  bool respects(const MonoidPresentation& p) const;
};

/// A nonnegative integer grading of largest possible support, or nothing when
/// the only one is zero. Sums the primitive nonnegative circuits of the
/// rational kernel of the relation-difference matrix.
std::optional<Grading> find_grading(const MonoidPresentation& p);

/// Kernel basis over Q of an integer matrix (rows x cols), scaled to
/// primitive integer vectors.
std::vector<std::vector<std::int64_t>> integer_kernel(
    const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

}  // namespace srank
