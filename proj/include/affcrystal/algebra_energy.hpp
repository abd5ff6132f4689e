#pragma once

#include "affcrystal/crystal.hpp"
#include "affcrystal/tensor.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcrystal {

/// Isomorphism B(theta) -> C(x_theta (x) y_i), stored as base vertex -> tensor vertex.
struct Psi {
  int i = 0;
  std::vector<int> image;  // kAbsent at the empty element
};

/// Indices i adjacent to node 0 with alpha_i in Lambda^+.
std::vector<int> psi_indices(const LevelOneCrystal& b);

/// Closed-form case formulas. Throws std::invalid_argument for an index
/// outside psi_indices, naming the valid choices.
Psi build_psi(const LevelOneCrystal& b, const TensorSquare& t, int i);

/// Transports x_theta -> x_theta (x) y_i along i != 0 arrows; independent of
/// the case formulas.
Psi propagate_psi(const LevelOneCrystal& b, const TensorSquare& t, int i);

struct PsiCheck {
  bool ok = true;
  std::string witness;  // first failure, empty when ok
};

/// Morphism test: commutes with e_k, f_k (k != 0), preserves eps, phi and wt,
/// is injective and hits exactly the classical component of x_theta (x) y_i.
PsiCheck verify_psi(const LevelOneCrystal& b, const TensorSquare& t, const Psi& psi);

/// Psi^{-1}(b1 (x) b2) on the component of x_theta (x) y_i, absent elsewhere.
std::optional<int> multiply(const TensorSquare& t, const Psi& psi, int b1, int b2);

/// Rows and columns over B(theta) in element order.
std::vector<std::vector<std::optional<int>>> multiplication_table(const LevelOneCrystal& b, const TensorSquare& t,
                                                                  const Psi& psi);

class EnergyInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H by breadth-first transport from an anchor; every edge is re-derived and
/// compared. Throws EnergyInconsistency naming the conflicting edge.
std::vector<int> energy_propagate(const TensorSquare& t, int anchor, int anchor_value);
/// Anchored at H(empty (x) empty) = 0.
std::vector<int> energy_propagate(const LevelOneCrystal& b, const TensorSquare& t);

enum class ComponentKind { EmptyEmpty, ThetaMinusTheta, LeftEmpty, RightEmpty, TwoTheta, ThetaComp, Generic };

struct ComponentLabel {
  ComponentKind kind = ComponentKind::Generic;
  int index = 0;  // ThetaComp only
  bool operator==(const ComponentLabel&) const = default;
  std::string to_string() const;
};

/// Membership in the closed-form description of C(x_theta (x) x_theta).
bool two_theta_predicate(const LevelOneCrystal& b, int b1, int b2);

/// Labels every tensor vertex. Shapes first (empty factors, x_theta (x) x_{-theta}),
/// then Psi images, then the two-theta predicate. y-shaped elements outside the
/// predicate are labeled by the classical component they actually lie in.
std::vector<ComponentLabel> classify_components(const LevelOneCrystal& b, const TensorSquare& t);

int energy_of(const ComponentLabel& label);
std::vector<int> energy_by_classification(const LevelOneCrystal& b, const TensorSquare& t);

/// H read off the unique maximal vector of each classical component. Besides the
/// seven tabulated shapes, x_theta (x) x_mu with theta - mu outside Lambda^+
/// gets H = 0: there e_0 acts on x_theta and lands in empty (x) B(theta).
/// Throws std::logic_error on a component without a unique recognized maximal vector.
std::vector<int> energy_by_maximal_vectors(const LevelOneCrystal& b, const TensorSquare& t);

struct FixtureCheck {
  bool ok = true;
  std::vector<std::string> mismatches;
  std::vector<std::vector<int>> table;  // table[a-1][b-1] = H(a (x) b)
};

/// Three-box crystal 1 -1-> 2 -2-> 3 -0-> 1; expects H(a (x) b) = 1 if a >= b, else 0.
FixtureCheck fixture_energy_check();
CrystalGraph three_box_crystal();

}  // namespace affcrystal
