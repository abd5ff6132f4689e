#include "affcrystal/affine_data.hpp"

#include "affcrystal/detail/rational_linear.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace affcrystal {

namespace {

std::string describe(char family, int rank, int twist) {
  return std::string(1, family) + std::to_string(rank) + "-" + std::to_string(twist);
}

class CartanBuilder {
 public:
  explicit CartanBuilder(int n) : m_(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 0)) {
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i][i] = 2;
  }

  // a_ij = <h_i, alpha_j>
  CartanBuilder& bond(int i, int j, int a_ij = -1, int a_ji = -1) {
    m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a_ij;
    m_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = a_ji;
    return *this;
  }

  CartanBuilder& chain(int from, int to) {
    for (int k = from; k < to; ++k) bond(k, k + 1);
    return *this;
  }

  std::vector<std::vector<int>> take() { return std::move(m_); }

 private:
  std::vector<std::vector<int>> m_;
};

// Finite rank of the affine algebra X_n^(r).
int finite_rank(const AffineType& t) {
  if (t.twist == 1) return t.rank;
  if (t.twist == 3) return 2;
  switch (t.family) {
    case 'A':
      return t.rank % 2 == 0 ? t.rank / 2 : (t.rank + 1) / 2;
    case 'D':
      return t.rank - 1;
    case 'E':
      return 4;
    default:
      return 0;
  }
}

// Node 0 attaches as in Kac's tables Aff 1-3.
std::vector<std::vector<int>> cartan_for(const AffineType& t) {
  const int n = finite_rank(t);
  CartanBuilder b(n);
  if (t.twist == 1) {
    switch (t.family) {
      case 'A':
        if (n == 1) return b.bond(0, 1, -2, -2).take();
        return b.chain(0, n).bond(n, 0).take();
      case 'B':
        return b.chain(1, n).bond(n - 1, n, -1, -2).bond(0, 2).take();
      case 'C':
        return b.chain(1, n).bond(n - 1, n, -2, -1).bond(0, 1, -1, -2).take();
      case 'D':
        return b.chain(1, n - 1).bond(n - 2, n).bond(0, 2).take();
      case 'E':
        if (n == 6) return b.chain(1, 5).bond(3, 6).bond(6, 0).take();
        if (n == 7) return b.chain(1, 6).bond(3, 7).bond(0, 1).take();
        return b.chain(1, 7).bond(3, 8).bond(7, 0).take();
      case 'F':
        return b.bond(0, 1).bond(1, 2).bond(2, 3, -1, -2).bond(3, 4).take();
      case 'G':
        return b.bond(0, 1).bond(1, 2, -1, -3).take();
      default:
        break;
    }
  } else if (t.twist == 2) {
    switch (t.family) {
      case 'A':
        if (t.rank % 2 == 0) {
          if (n == 1) return b.bond(0, 1, -4, -1).take();
          return b.bond(0, 1, -2, -1).chain(1, n - 1).bond(n - 1, n, -2, -1).take();
        }
        return b.chain(1, n - 1).bond(n - 1, n, -2, -1).bond(0, 2).take();
      case 'D':
        return b.bond(0, 1, -2, -1).chain(1, n - 1).bond(n - 1, n, -1, -2).take();
      case 'E':
        return b.bond(0, 1).bond(1, 2).bond(2, 3, -2, -1).bond(3, 4).take();
      default:
        break;
    }
  } else {
    return b.bond(0, 1).bond(1, 2, -3, -1).take();
  }
  throw std::logic_error("no Cartan generator for " + describe(t.family, t.rank, t.twist));
}

FiniteType finite_type_for(const AffineType& t) {
  const int n = finite_rank(t);
  if (t.twist == 1) return {t.family, n, false};
  if (t.twist == 3) return {'G', 2, false};
  if (t.family == 'A') return {'C', n, false};
  if (t.family == 'D') return {'B', n, false};
  return {'F', 4, true};
}

std::vector<int> symmetrizers_for(const std::vector<int>& marks, const std::vector<int>& comarks) {
  // s_i proportional to c_i / d_i
  std::vector<detail::Rational> ratio;
  std::int64_t lcm = 1;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    ratio.emplace_back(comarks[i], marks[i]);
    lcm = std::lcm(lcm, ratio.back().denominator());
  }
  std::vector<std::int64_t> scaled;
  std::int64_t g = 0;
  for (const auto& r : ratio) {
    scaled.push_back(r.numerator() * (lcm / r.denominator()));
    g = std::gcd(g, scaled.back());
  }
  std::vector<int> out;
  for (auto v : scaled) out.push_back(static_cast<int>(v / g));
  return out;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<int>> t(m.front().size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

std::string AffineType::name() const { return describe(family, rank, twist); }

std::string FiniteType::name() const {
  return std::string(1, family) + std::to_string(rank) + (transposed ? "^t" : "");
}

bool is_valid(const AffineType& t) {
  switch (t.twist) {
    case 1:
      switch (t.family) {
        case 'A': return t.rank >= 1;
        case 'B': return t.rank >= 3;
        case 'C': return t.rank >= 2;
        case 'D': return t.rank >= 4;
        case 'E': return t.rank >= 6 && t.rank <= 8;
        case 'F': return t.rank == 4;
        case 'G': return t.rank == 2;
        default: return false;
      }
    case 2:
      switch (t.family) {
        // A_{2n}^(2), n >= 1 and A_{2n-1}^(2), n >= 3
        case 'A': return t.rank >= 2 && (t.rank % 2 == 0 || t.rank >= 5);
        case 'D': return t.rank >= 3;
        case 'E': return t.rank == 6;
        default: return false;
      }
    case 3:
      return t.family == 'D' && t.rank == 4;
    default:
      return false;
  }
}

AffineType parse_type(std::string_view text) {
  auto fail = [&](const std::string& why) {
    return std::invalid_argument("invalid affine type '" + std::string(text) + "': " + why);
  };
  if (text.size() < 4) throw fail("expected <letter><rank>-<twist>, e.g. A2-1");
  AffineType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  const auto dash = text.find('-');
  if (dash == std::string_view::npos || dash < 2) throw fail("expected <letter><rank>-<twist>, e.g. A2-1");
  const auto rank_part = text.substr(1, dash - 1);
  const auto twist_part = text.substr(dash + 1);
  auto parse_int = [&](std::string_view s, int& out) {
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
  };
  if (!parse_int(rank_part, t.rank) || !parse_int(twist_part, t.twist)) {
    throw fail("rank and twist must be integers");
  }
  if (!is_valid(t)) {
    throw fail("family " + std::string(1, t.family) + " with rank " + std::to_string(t.rank) +
               " and twist " + std::to_string(t.twist) + " is not an affine type");
  }
  return t;
}

std::vector<AffineType> sweep_types(int max_rank) {
  std::vector<AffineType> out;
  for (int twist : {1, 2}) {
    for (char f : {'A', 'B', 'C', 'D'}) {
      for (int r = 1; r <= max_rank; ++r) {
        AffineType t{f, r, twist};
        if (is_valid(t)) out.push_back(t);
      }
    }
  }
  const AffineType exceptional[] = {{'E', 6, 1}, {'E', 7, 1}, {'E', 8, 1}, {'F', 4, 1},
                                    {'G', 2, 1}, {'E', 6, 2}, {'D', 4, 3}};
  for (const auto& t : exceptional) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

std::vector<int> AffineDatum::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j <= n; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

AffineDatum build_datum(const AffineType& type) {
  if (!is_valid(type)) {
    throw std::invalid_argument("invalid affine type: family " + std::string(1, type.family) +
                                " rank " + std::to_string(type.rank) + " twist " +
                                std::to_string(type.twist));
  }
  AffineDatum d;
  d.type = type;
  d.n = finite_rank(type);
  d.cartan = cartan_for(type);
  d.finite_type = finite_type_for(type);
  d.marks = detail::positive_null_vector(d.cartan);
  d.comarks = detail::positive_null_vector(transpose(d.cartan));
  if (d.marks.empty() || d.comarks.empty()) {
    throw std::logic_error("Cartan matrix of " + type.name() + " is not of affine type");
  }
  const bool a_even_twisted = type.family == 'A' && type.twist == 2 && type.rank % 2 == 0;
  if (d.comarks[0] != 1 || d.marks[0] != (a_even_twisted ? 2 : 1)) {
    throw std::logic_error("unexpected normalization of marks/comarks for " + type.name());
  }
  d.symmetrizers = symmetrizers_for(d.marks, d.comarks);
  for (int i = 0; i <= d.n; ++i)
    for (int j = 0; j <= d.n; ++j)
      if (d.symmetrizers[static_cast<std::size_t>(i)] * d.a(i, j) !=
          d.symmetrizers[static_cast<std::size_t>(j)] * d.a(j, i))
        throw std::logic_error("Cartan matrix of " + type.name() + " is not symmetrizable");
  return d;
}

AffineWeight fundamental_weight(const AffineDatum& d, int i) {
  AffineWeight w;
  w.lambda.assign(static_cast<std::size_t>(d.size()), 0);
  w.lambda[static_cast<std::size_t>(i)] = 1;
  return w;
}

std::vector<int> simple_root_lambda(const AffineDatum& d, int i) {
  std::vector<int> out(static_cast<std::size_t>(d.size()));
  for (int j = 0; j <= d.n; ++j) out[static_cast<std::size_t>(j)] = d.a(j, i);
  return out;
}

int level(const AffineWeight& w, const AffineDatum& d) {
  int total = 0;
  for (std::size_t i = 0; i < w.lambda.size(); ++i) total += d.comarks[i] * w.lambda[i];
  return total;
}

std::vector<AffineWeight> level_one_dominants(const AffineDatum& d) {
  std::vector<AffineWeight> out;
  for (int i = 0; i <= d.n; ++i)
    if (d.comarks[static_cast<std::size_t>(i)] == 1) out.push_back(fundamental_weight(d, i));
  return out;
}

}  // namespace affcrystal
