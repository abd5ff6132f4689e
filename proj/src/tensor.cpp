#include "affcrystal/tensor.hpp"

#include <algorithm>
#include <deque>

namespace affcrystal {

std::optional<TensorElement> tensor_f(const CrystalGraph& base, TensorElement t, int i) {
  if (base.phi(t.left, i) > base.epsilon(t.right, i)) {
    const int b = base.f(t.left, i);
    if (b == kAbsent) return std::nullopt;
    return TensorElement{b, t.right};
  }
  const int b = base.f(t.right, i);
  if (b == kAbsent) return std::nullopt;
  return TensorElement{t.left, b};
}

std::optional<TensorElement> tensor_e(const CrystalGraph& base, TensorElement t, int i) {
  if (base.phi(t.left, i) >= base.epsilon(t.right, i)) {
    const int b = base.e(t.left, i);
    if (b == kAbsent) return std::nullopt;
    return TensorElement{b, t.right};
  }
  const int b = base.e(t.right, i);
  if (b == kAbsent) return std::nullopt;
  return TensorElement{t.left, b};
}

StringStats tensor_stats(const CrystalGraph& base, TensorElement t, int i) {
  const int e1 = base.epsilon(t.left, i), p1 = base.phi(t.left, i);
  const int e2 = base.epsilon(t.right, i), p2 = base.phi(t.right, i);
  return {std::max(e1, e1 + e2 - p1), std::max(p2, p1 + p2 - e2)};
}

TensorSquare::TensorSquare(CrystalGraph base, CrystalGraph graph)
    : base_(std::move(base)), m_(base_.size()), graph_(std::move(graph)) {}

namespace {

template <bool Parallel>
TensorSquare build_square(const CrystalGraph& base) {
  const int m = base.size();
  const int indices = base.num_indices();
  const long long total = static_cast<long long>(m) * m;
  std::vector<int> target(static_cast<std::size_t>(total * indices), kAbsent);
  std::vector<std::string> labels(static_cast<std::size_t>(total));

  auto fill = [&](long long t) {
    const TensorElement el{static_cast<int>(t / m), static_cast<int>(t % m)};
    labels[static_cast<std::size_t>(t)] = "(" + base.label(el.left) + "," + base.label(el.right) + ")";
    for (int i = 0; i < indices; ++i) {
      if (auto next = tensor_f(base, el, i))
        target[static_cast<std::size_t>(t * indices + i)] = next->left * m + next->right;
    }
  };
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < total; ++t) fill(t);
  } else {
    for (long long t = 0; t < total; ++t) fill(t);
  }

  std::vector<Arrow> arrows;
  for (int i = 0; i < indices; ++i)
    for (long long t = 0; t < total; ++t) {
      const int to = target[static_cast<std::size_t>(t * indices + i)];
      if (to != kAbsent) arrows.push_back({i, static_cast<int>(t), to});
    }
  return TensorSquare(base, CrystalGraph(indices, std::move(labels), arrows));
}

}  // namespace

TensorSquare tensor_product(const CrystalGraph& base) { return build_square<true>(base); }
TensorSquare tensor_product_serial(const CrystalGraph& base) { return build_square<false>(base); }

std::vector<int> maximal_vectors(const CrystalGraph& g) {
  std::vector<int> out;
  for (int b = 0; b < g.size(); ++b) {
    bool maximal = true;
    for (int i = 1; i < g.num_indices() && maximal; ++i) maximal = g.e(b, i) == kAbsent;
    if (maximal) out.push_back(b);
  }
  return out;
}

Components components(const CrystalGraph& g, bool omit_zero) {
  Components out;
  out.component_of.assign(static_cast<std::size_t>(g.size()), -1);
  const int first = omit_zero ? 1 : 0;
  for (int seed = 0; seed < g.size(); ++seed) {
    if (out.component_of[static_cast<std::size_t>(seed)] >= 0) continue;
    const int id = out.count();
    std::vector<int> members{seed};
    out.component_of[static_cast<std::size_t>(seed)] = id;
    std::deque<int> queue{seed};
    while (!queue.empty()) {
      const int b = queue.front();
      queue.pop_front();
      for (int i = first; i < g.num_indices(); ++i) {
        for (int c : {g.f(b, i), g.e(b, i)}) {
          if (c == kAbsent || out.component_of[static_cast<std::size_t>(c)] >= 0) continue;
          out.component_of[static_cast<std::size_t>(c)] = id;
          members.push_back(c);
          queue.push_back(c);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.members.push_back(std::move(members));
  }
  return out;
}

}  // namespace affcrystal
