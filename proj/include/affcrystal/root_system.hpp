#pragma once

#include "affcrystal/affine_data.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace affcrystal {

/// Coefficients over alpha_1..alpha_n with denominators dividing 2, stored
/// doubled so arithmetic stays exact in integers.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(int n) : twice_(static_cast<std::size_t>(n), 0) {}

  static RootVector simple(int n, int i);  // alpha_i, i in 1..n
  static RootVector from_twice(std::vector<int> twice) {
    RootVector r;
    r.twice_ = std::move(twice);
    return r;
  }

  int rank() const { return static_cast<int>(twice_.size()); }
  /// Doubled coefficient of alpha_i, i in 1..n.
  int twice(int i) const { return twice_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& twice_coeffs() const { return twice_; }

  bool is_zero() const;
  bool is_integral() const;
  bool nonnegative() const;
  int twice_height() const;
  std::vector<int> support() const;  // indices i with nonzero coefficient

  /// <h_j, this> for j in 0..n; throws if the pairing is not integral.
  int pairing(const AffineDatum& d, int j) const;
  /// Lambda-coordinates of the classical weight on h_0..h_n.
  std::vector<int> classical_weight(const AffineDatum& d) const;

  RootVector operator-() const;
  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(int k, RootVector a) {
    for (auto& v : a.twice_) v *= k;
    return a;
  }

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;

  /// "a1+2a2", "-(1/2)a2", "0".
  std::string to_string() const;

 private:
  std::vector<int> twice_;
};

struct RootVectorHash {
  std::size_t operator()(const RootVector& r) const noexcept;
};

enum class RootLength { Short, Long };

struct Root {
  RootVector vec;
  RootLength length = RootLength::Long;
};

/// Full root system of the finite algebra g (rows/cols 1..n of the Cartan
/// matrix), positive roots first ordered by height, then their negatives.
std::vector<Root> finite_roots(const AffineDatum& d);

struct LambdaWeights {
  RootVector theta;
  std::vector<RootVector> positive;  // Lambda^+, highest first (theta leads), ties lexicographic
  std::vector<int> has_y;            // i with alpha_i in Lambda^+
};

LambdaWeights lambda_weights(const AffineDatum& d);

/// alpha <= beta iff beta - alpha has only nonnegative coefficients.
bool leq(const RootVector& alpha, const RootVector& beta);

/// Unique path i = i_1, ..., i_t = j in the finite Dynkin diagram (nodes 1..n).
std::vector<int> dynkin_path(const AffineDatum& d, int i, int j);

/// Nodes from the support of gamma to i, excluding the support, ending at i.
/// Requires the coefficient of alpha_i in gamma to vanish.
std::vector<int> connect_support(const AffineDatum& d, const RootVector& gamma, int i);

}  // namespace affcrystal
