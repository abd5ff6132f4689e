#pragma once

#include "affcrystal/crystal.hpp"

#include <optional>
#include <vector>

namespace affcrystal {

/// b1 (x) b2 with b2 the rightmost factor.
struct TensorElement {
  int left;
  int right;
  bool operator==(const TensorElement&) const = default;
};

/// Acts on the left factor iff phi_i(b1) > eps_i(b2).
std::optional<TensorElement> tensor_f(const CrystalGraph& base, TensorElement t, int i);
/// Acts on the left factor iff phi_i(b1) >= eps_i(b2).
std::optional<TensorElement> tensor_e(const CrystalGraph& base, TensorElement t, int i);
/// Closed-form string lengths of b1 (x) b2.
StringStats tensor_stats(const CrystalGraph& base, TensorElement t, int i);

/// B (x) B materialized; vertex t encodes left * |B| + right.
class TensorSquare {
 public:
  TensorSquare(CrystalGraph base, CrystalGraph graph);

  const CrystalGraph& base() const { return base_; }
  const CrystalGraph& graph() const { return graph_; }
  int size() const { return graph_.size(); }
  int index(int left, int right) const { return left * m_ + right; }
  int index(TensorElement t) const { return index(t.left, t.right); }
  TensorElement element(int t) const { return {t / m_, t % m_}; }

 private:
  CrystalGraph base_;
  int m_ = 0;
  CrystalGraph graph_;
};

/// Vertex labels are "(left,right)". The f-arrow table is filled in parallel.
TensorSquare tensor_product(const CrystalGraph& base);
/// Single-threaded reference for tensor_product.
TensorSquare tensor_product_serial(const CrystalGraph& base);

/// Vertices killed by every e_i with i != 0.
std::vector<int> maximal_vectors(const CrystalGraph& g);

struct Components {
  std::vector<int> component_of;          // vertex -> component id
  std::vector<std::vector<int>> members;  // ids numbered by smallest member, members ascending
  int count() const { return static_cast<int>(members.size()); }
};

/// Undirected connected components over arrows with index in I, or I minus {0}.
Components components(const CrystalGraph& g, bool omit_zero);

}  // namespace affcrystal
