#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace affcrystal {

/// An affine family X_n^(r), written `<letter><rank>-<twist>` on the command line.
struct AffineType {
  char family = 'A';  // one of A..G, uppercase
  int rank = 1;       // subscript n of X_n^(r)
  int twist = 1;      // superscript r

  std::string name() const;
  bool operator==(const AffineType&) const = default;
};

/// Parses `A2-1`, `d4-3`, ... and validates against the fourteen affine families.
/// Throws std::invalid_argument naming the offending family and rank.
AffineType parse_type(std::string_view text);

bool is_valid(const AffineType& type);

/// Every valid type with subscript <= max_rank, followed by the exceptional
/// families (E6..E8, F4, G2 untwisted, E6-2, D4-3) regardless of max_rank.
std::vector<AffineType> sweep_types(int max_rank);

/// The finite simple algebra attached to the affine algebra. `transposed`
/// marks F4^t (the transpose of the F4 Cartan matrix).
struct FiniteType {
  char family = 'A';
  int rank = 1;
  bool transposed = false;

  std::string name() const;
  bool operator==(const FiniteType&) const = default;
};

struct AffineDatum {
  AffineType type;
  int n = 0;  // rank of the finite algebra; indices run over 0..n
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <h_i, alpha_j>
  std::vector<int> marks;                // d_0..d_n, A d = 0
  std::vector<int> comarks;              // c_0..c_n, c A = 0
  std::vector<int> symmetrizers;         // diag(s) A symmetric
  FiniteType finite_type;

  int size() const { return n + 1; }
  int a(int i, int j) const { return cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }
  std::vector<int> neighbors(int i) const;
};

AffineDatum build_datum(const AffineType& type);

/// Weight in P = Z Lambda_0 + ... + Z Lambda_n + Z delta. `delta` counts
/// multiples of delta in the homogeneous grading (always zero for classical
/// weights coming from a finite crystal).
struct AffineWeight {
  std::vector<int> lambda;
  std::int64_t delta = 0;

  bool operator==(const AffineWeight&) const = default;
  auto operator<=>(const AffineWeight&) const = default;
};

AffineWeight fundamental_weight(const AffineDatum& d, int i);

/// Classical image of the simple root alpha_i: sum_j a_{j,i} Lambda_j.
std::vector<int> simple_root_lambda(const AffineDatum& d, int i);

int level(const AffineWeight& w, const AffineDatum& d);

/// Lambda_i with c_i = 1, ascending index.
std::vector<AffineWeight> level_one_dominants(const AffineDatum& d);

}  // namespace affcrystal
