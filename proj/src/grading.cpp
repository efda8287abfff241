#include "srank/grading.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/rational.hpp>

namespace srank {

namespace {

using Q = boost::rational<std::int64_t>;

std::vector<std::int64_t> primitive(const std::vector<Q>& v) {
  std::int64_t l = 1;
  for (const auto& q : v) l = std::lcm(l, q.denominator());
  std::vector<std::int64_t> out(v.size());
  std::int64_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = (v[i] * l).numerator();
    g = std::gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

std::uint64_t Grading::min_positive_weight() const {
  std::uint64_t m = 0;
  for (auto w : weights)
    if (w > 0 && (m == 0 || w < m)) m = w;
  return m;
}

bool Grading::respects(const MonoidPresentation& p) const {
  if (weights.size() != p.rank()) return false;
  return std::all_of(p.relations.begin(), p.relations.end(),
                     [&](const Relation& r) { return (*this)(r.lhs) == (*this)(r.rhs); });
}

std::vector<std::vector<std::int64_t>> integer_kernel(
    const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  std::vector<std::vector<Q>> m;
  for (const auto& r : rows) {
    std::vector<Q> qr(cols);
    for (std::size_t c = 0; c < cols; ++c) qr[c] = Q(r[c]);
    m.push_back(std::move(qr));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c].numerator() == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Q inv = Q(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].numerator() == 0) continue;
      Q f = m[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_cols.push_back(c);
    ++row;
  }
  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Q> v(cols, Q(0));
    v[free] = Q(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

std::optional<Grading> find_grading(const MonoidPresentation& p) {
  const std::size_t k = p.rank();
  std::vector<std::vector<std::int64_t>> diff;
  for (const auto& r : p.relations) {
    std::vector<std::int64_t> row(k);
    for (std::size_t i = 0; i < k; ++i)
      row[i] = static_cast<std::int64_t>(r.lhs[i]) - static_cast<std::int64_t>(r.rhs[i]);
    diff.push_back(std::move(row));
  }

  // Every nonnegative kernel vector is a conformal sum of nonnegative
  // circuits, so the sum of all of them has the largest support.
  std::set<std::vector<std::int64_t>> circuits;
  const std::size_t rank = k - integer_kernel(diff, k).size();
  std::vector<std::size_t> subset;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!subset.empty()) {
      std::vector<std::vector<std::int64_t>> restricted;
      for (const auto& row : diff) {
        std::vector<std::int64_t> rr;
        for (auto c : subset) rr.push_back(row[c]);
        restricted.push_back(std::move(rr));
      }
      auto ker = integer_kernel(restricted, subset.size());
      if (ker.size() == 1) {
        auto v = ker.front();
        bool full = std::all_of(v.begin(), v.end(), [](auto x) { return x != 0; });
        bool nonneg = std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
        bool nonpos = std::all_of(v.begin(), v.end(), [](auto x) { return x <= 0; });
        if (full && (nonneg || nonpos)) {
          std::vector<std::int64_t> w(k, 0);
          for (std::size_t i = 0; i < subset.size(); ++i) w[subset[i]] = nonneg ? v[i] : -v[i];
          circuits.insert(std::move(w));
        }
      }
    }
    if (subset.size() == rank + 1) return;
    for (std::size_t c = start; c < k; ++c) {
      subset.push_back(c);
      self(self, c + 1);
      subset.pop_back();
    }
  };
  visit(visit, 0);

  if (circuits.empty()) return std::nullopt;
  std::vector<std::int64_t> sum(k, 0);
  for (const auto& c : circuits)
    for (std::size_t i = 0; i < k; ++i) sum[i] += c[i];
  std::int64_t g = 0;
  for (auto x : sum) g = std::gcd(g, x);
  Grading out;
  for (auto x : sum) out.weights.push_back(static_cast<std::uint64_t>(x / g));
  return out;
}

}  // namespace srank
