#include "affcrystal/detail/rational_linear.hpp"

#include <numeric>

namespace affcrystal::detail {

RationalMatrix to_rational(const std::vector<std::vector<int>>& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (int v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].numerator() == 0) continue;
      const Rational f = m[k][c];
      for (std::size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<int> positive_null_vector(const std::vector<std::vector<int>>& m) {
  auto red = to_rational(m);
  const auto pivots = row_reduce(red);
  const std::size_t cols = m.front().size();
  if (pivots.size() + 1 != cols) return {};

  std::size_t free_col = 0;
  for (std::size_t c = 0, p = 0; c < cols; ++c) {
    if (p < pivots.size() && pivots[p] == c) {
      ++p;
    } else {
      free_col = c;
      break;
    }
  }

  std::vector<Rational> v(cols, Rational(0));
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red[r][free_col];

  std::int64_t lcm = 1;
  for (const auto& x : v) lcm = std::lcm(lcm, x.denominator());
  std::vector<std::int64_t> ints;
  for (const auto& x : v) ints.push_back(x.numerator() * (lcm / x.denominator()));
  std::int64_t g = 0;
  for (auto x : ints) g = std::gcd(g, x);
  const bool negative = ints.front() < 0;
  std::vector<int> out;
  for (auto x : ints) {
    std::int64_t y = x / g;
    if (negative) y = -y;
    if (y <= 0) return {};
    out.push_back(static_cast<int>(y));
  }
  return out;
}

std::optional<std::vector<Rational>> solve(const std::vector<std::vector<int>>& m,
                                           const std::vector<Rational>& rhs) {
  const std::size_t n = m.size();
  RationalMatrix aug = to_rational(m);
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(rhs[i]);
  const auto pivots = row_reduce(aug);
  if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace affcrystal::detail
