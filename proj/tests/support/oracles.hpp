#pragma once
// Independent reference computations for the test suites. Nothing here calls
// into the library except for reading Cartan integers and graph arrows.

#include "affcrystal/affine_data.hpp"
#include "affcrystal/crystal.hpp"
#include "affcrystal/tensor.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
using Vec = std::vector<int>;

inline Matrix finite_block(const affcrystal::AffineDatum& d) {
  Matrix m(static_cast<std::size_t>(d.n), Vec(static_cast<std::size_t>(d.n)));
  for (int i = 1; i <= d.n; ++i)
    for (int j = 1; j <= d.n; ++j) m[i - 1][j - 1] = d.a(i, j);
  return m;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t[j][i] = m[i][j];
  return t;
}

/// Roots as integer vectors over the simple roots: orbit of the simple roots
/// under the simple reflections s_i(b) = b - <h_i, b> alpha_i.
inline std::set<Vec> weyl_orbit_roots(const Matrix& a) {
  const std::size_t n = a.size();
  std::set<Vec> seen;
  std::deque<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    const Vec b = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      int pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += a[i][j] * b[j];
      Vec r = b;
      r[i] -= pairing;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  return seen;
}

/// Weyl dimension formula prod_{a > 0} (lambda + rho, a^vee) / (rho, a^vee),
/// with positive coroots taken as the positive roots of the transposed matrix.
inline std::int64_t weyl_dimension(const Matrix& a, const Vec& highest) {
  using Q = boost::rational<std::int64_t>;
  Q dim(1);
  for (const auto& co : weyl_orbit_roots(transpose(a))) {
    if (*std::min_element(co.begin(), co.end()) < 0) continue;
    std::int64_t num = 0, den = 0;
    for (std::size_t j = 0; j < co.size(); ++j) {
      num += co[j] * (highest[j] + 1);
      den += co[j];
    }
    dim *= Q(num, den);
  }
  return dim.numerator();
}

/// (from label, index, to label) triples, sorted.
using EdgeSet = std::set<std::tuple<std::string, int, std::string>>;

inline EdgeSet edges(const affcrystal::CrystalGraph& g) {
  EdgeSet out;
  for (const auto& a : g.arrows()) out.insert({g.label(a.from), a.index, g.label(a.to)});
  return out;
}

/// String lengths by walking f and e.
inline affcrystal::StringStats walk(const affcrystal::CrystalGraph& g, int b, int i) {
  int eps = 0, phi = 0;
  for (int v = g.e(b, i); v != affcrystal::kAbsent; v = g.e(v, i)) ++eps;
  for (int v = g.f(b, i); v != affcrystal::kAbsent; v = g.f(v, i)) ++phi;
  return {eps, phi};
}

/// Stats of a finite tensor product given factor stats, leftmost first, by
/// folding the two-factor formulas.
inline affcrystal::StringStats fold_stats(const std::vector<affcrystal::StringStats>& factors) {
  affcrystal::StringStats acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) {
    const auto& r = factors[k];
    acc = {std::max(acc.epsilon, acc.epsilon + r.epsilon - acc.phi), std::max(r.phi, acc.phi + r.phi - r.epsilon)};
  }
  return acc;
}

/// sum_{n} p_r(n) q^n, the r-colored partition numbers, by the Euler recurrence
/// for r = 1 followed by r-fold convolution.
inline std::vector<std::int64_t> colored_partition_numbers(int colors, int top) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(top) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= top; ++n) {
    std::int64_t s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) s += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = s;
  }
  std::vector<std::int64_t> out(p.size(), 0);
  out[0] = 1;
  for (int c = 0; c < colors; ++c) {
    std::vector<std::int64_t> next(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; i + j < p.size(); ++j) next[i + j] += out[i] * p[j];
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
