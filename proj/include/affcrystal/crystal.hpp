#pragma once

#include "affcrystal/affine_data.hpp"
#include "affcrystal/root_system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace affcrystal {

inline constexpr int kAbsent = -1;

struct Arrow {
  int index;  // Kashiwara index i
  int from;
  int to;     // f_i(from) = to
};

/// A finite crystal graph with vertices 0..size()-1 and Kashiwara operators
/// given by one partial injection per index. Immutable once built; string
/// statistics are tabulated at construction by walking the strings.
class CrystalGraph {
 public:
  CrystalGraph() = default;
  /// Throws std::invalid_argument if some f_i is not injective or an arrow
  /// is listed twice with different targets.
  CrystalGraph(int num_indices, std::vector<std::string> labels, const std::vector<Arrow>& arrows);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_indices() const { return indices_; }
  const std::string& label(int b) const { return labels_[static_cast<std::size_t>(b)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> find(std::string_view label) const;

  int f(int b, int i) const { return f_[slot(b, i)]; }
  int e(int b, int i) const { return e_[slot(b, i)]; }
  int epsilon(int b, int i) const { return eps_[slot(b, i)]; }
  int phi(int b, int i) const { return phi_[slot(b, i)]; }

  std::vector<int> epsilon_vec(int b) const;
  std::vector<int> phi_vec(int b) const;
  /// phi(b) - eps(b) in Lambda-coordinates.
  std::vector<int> weight(int b) const;

  std::vector<Arrow> arrows() const;

 private:
  std::size_t slot(int b, int i) const {
    return static_cast<std::size_t>(i) * labels_.size() + static_cast<std::size_t>(b);
  }

  int indices_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> f_, e_, eps_, phi_;
};

/// Vertex of B = B(theta) + B(0): x_alpha (alpha in Lambda), y_i, or the empty
/// element spanning B(0).
struct CrystalElement {
  enum class Kind { X, Y, Empty };
  Kind kind = Kind::Empty;
  RootVector root;  // X only
  int index = 0;    // Y only

  static CrystalElement x(RootVector r) { return {Kind::X, std::move(r), 0}; }
  static CrystalElement y(int i) { return {Kind::Y, {}, i}; }
  static CrystalElement empty() { return {}; }

  /// `x[1,1/2]`, `y_2`, `empty`.
  std::string label() const;
  bool operator==(const CrystalElement&) const = default;
};

/// The level-1 crystal B(theta) + B(0) together with the Cartan data it came from.
class LevelOneCrystal {
 public:
  LevelOneCrystal(AffineDatum datum, LambdaWeights lambda, std::vector<CrystalElement> elements,
                  CrystalGraph graph);

  const AffineDatum& datum() const { return datum_; }
  const LambdaWeights& lambda() const { return lambda_; }
  const CrystalGraph& graph() const { return graph_; }
  const std::vector<CrystalElement>& elements() const { return elements_; }
  const CrystalElement& element(int b) const { return elements_[static_cast<std::size_t>(b)]; }
  int size() const { return graph_.size(); }

  /// Vertex of x_alpha, or kAbsent when alpha is not in Lambda.
  int x(const RootVector& alpha) const;
  int y(int i) const;  // kAbsent when alpha_i is not in Lambda^+
  int empty() const { return size() - 1; }
  int x_theta() const { return x(lambda_.theta); }
  int x_minus_theta() const { return x(-lambda_.theta); }
  bool is_theta_part(int b) const { return b != empty(); }

  /// Lambda-coordinates plus delta = 0.
  AffineWeight weight_of(int b) const;
  AffineWeight eps_vec(int b) const;
  AffineWeight phi_vec(int b) const;

  /// Same elements over a different arrow set; used to inject faults.
  LevelOneCrystal with_graph(CrystalGraph graph) const;

 private:
  AffineDatum datum_;
  LambdaWeights lambda_;
  std::vector<CrystalElement> elements_;
  CrystalGraph graph_;
  std::unordered_map<RootVector, int, RootVectorHash> x_index_;
};

/// Builds B = B(theta) + B(0) with the level-1 arrow rules. Elements are
/// ordered x_alpha (alpha in Lambda^+, highest first), y_i by index,
/// x_{-alpha} in the same order, then the empty element.
LevelOneCrystal build_crystal(const AffineDatum& d);

std::optional<int> f_tilde(const CrystalGraph& g, int b, int i);
std::optional<int> e_tilde(const CrystalGraph& g, int b, int i);

struct StringStats {
  int epsilon;
  int phi;
  bool operator==(const StringStats&) const = default;
};

StringStats string_stats(const CrystalGraph& g, int b, int i);

/// DOT rendering; 0-edges dashed. Deterministic.
std::string to_dot(const CrystalGraph& g, std::string_view name);

}  // namespace affcrystal
