#pragma once

#include "affcrystal/crystal.hpp"
#include "affcrystal/tensor.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace affcrystal {

/// b_0, b_1, ... with b_0 = b_lambda and b_{k+1} = b_{eps(b_k)}; entries from
/// `period_start` on repeat with length `period`.
struct GroundState {
  int lambda = 0;                 // index i of Lambda_i
  std::vector<int> elements;      // b_0 .. b_{period_start + period - 1}
  std::vector<int> weights;       // lambda_k as dominant indices, same length
  int period_start = 0;
  int period = 1;

  int at(std::size_t k) const;
  int weight_at(std::size_t k) const;
};

/// ... (x) p_2 (x) p_1 (x) p_0 with p_k = b_k beyond the prefix. Canonical when
/// the last prefix entry differs from the ground state.
struct Path {
  int lambda = 0;
  std::vector<int> prefix;  // p_0 first

  bool operator==(const Path&) const = default;
};

struct PathHash {
  std::size_t operator()(const Path& p) const noexcept;
};

/// Level-1 path realization of the highest-weight crystals B(Lambda_i) over B.
/// Holds the energy table of B (x) B used for the affine grading.
class PathModel {
 public:
  explicit PathModel(LevelOneCrystal b);

  const LevelOneCrystal& crystal() const { return b_; }
  const TensorSquare& square() const { return t_; }
  const std::vector<int>& energy() const { return h_; }
  /// Indices i with Lambda_i of level 1.
  const std::vector<int>& dominants() const { return dominants_; }

  /// Throws std::invalid_argument unless Lambda_lambda has level 1.
  const GroundState& ground_state(int lambda) const;
  Path ground_path(int lambda) const { return {lambda, {}}; }

  std::optional<Path> f(const Path& p, int i) const;
  std::optional<Path> e(const Path& p, int i) const;
  StringStats stats(const Path& p, int i) const;
  AffineWeight weight(const Path& p) const;

  int energy(int left, int right) const { return h_[static_cast<std::size_t>(t_.index(left, right))]; }

 private:
  std::optional<Path> apply(const Path& p, int i, bool lower) const;
  void canonicalize(Path& p) const;

  LevelOneCrystal b_;
  TensorSquare t_;
  std::vector<int> h_;
  std::vector<int> dominants_;
  std::vector<std::optional<GroundState>> ground_;
};

/// Multiplicities of the weights of L(Lambda_lambda) with delta-degree >= -max_depth.
using Character = std::map<AffineWeight, std::int64_t>;

/// Layer-by-layer generation from the ground-state path; each layer's
/// successors are computed concurrently and merged in a fixed order.
Character character(const PathModel& model, int lambda, int max_depth);
/// Single-threaded queue traversal. `reverse_indices` applies f_n .. f_0
/// instead of f_0 .. f_n; the resulting character must not change.
Character character_serial(const PathModel& model, int lambda, int max_depth, bool reverse_indices = false);

/// Entries sorted by depth (minus the delta-degree), then classical weight.
std::vector<std::pair<AffineWeight, std::int64_t>> sorted_character(const Character& ch);

/// Simply-laced untwisted types only.
bool oracle_supported(const AffineDatum& d);

/// Multiplicity of Lambda_0 + beta - n delta in L(Lambda_0): the coefficient of
/// q^{n - (beta,beta)/2} in prod_k (1 - q^k)^{-rank}. `beta` holds coefficients
/// over alpha_1..alpha_n. Throws std::invalid_argument when unsupported.
std::int64_t oracle_multiplicity(const AffineDatum& d, const std::vector<int>& beta, int n);

/// beta with Lambda_0 + beta having the given Lambda-coordinates, or nullopt
/// when the weight is not Lambda_0 plus a root-lattice element.
std::optional<std::vector<int>> root_lattice_coordinates(const AffineDatum& d, const std::vector<int>& lambda);

/// Every nonzero oracle entry with depth <= max_depth, keyed like `character`.
Character oracle_character(const AffineDatum& d, int max_depth);

}  // namespace affcrystal
