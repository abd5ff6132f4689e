#include "affcrystal/crystal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace affcrystal {

CrystalGraph::CrystalGraph(int num_indices, std::vector<std::string> labels, const std::vector<Arrow>& arrows)
    : indices_(num_indices), labels_(std::move(labels)) {
  const std::size_t cells = static_cast<std::size_t>(indices_) * labels_.size();
  f_.assign(cells, kAbsent);
  e_.assign(cells, kAbsent);
  for (const auto& a : arrows) {
    if (a.index < 0 || a.index >= indices_ || a.from < 0 || a.from >= size() || a.to < 0 || a.to >= size()) {
      throw std::invalid_argument("arrow out of range");
    }
    auto& fwd = f_[slot(a.from, a.index)];
    auto& back = e_[slot(a.to, a.index)];
    if ((fwd != kAbsent && fwd != a.to) || (back != kAbsent && back != a.from)) {
      throw std::invalid_argument("f_" + std::to_string(a.index) + " is not a partial injection at " +
                                  label(a.from) + " -> " + label(a.to));
    }
    fwd = a.to;
    back = a.from;
  }

  eps_.assign(cells, 0);
  phi_.assign(cells, 0);
  for (int i = 0; i < indices_; ++i) {
    for (int b = 0; b < size(); ++b) {
      int k = 0;
      for (int c = e(b, i); c != kAbsent; c = e(c, i)) {
        if (++k > size()) throw std::invalid_argument("e-string cycle at " + label(b));
      }
      eps_[slot(b, i)] = k;
      k = 0;
      for (int c = f(b, i); c != kAbsent; c = f(c, i)) {
        if (++k > size()) throw std::invalid_argument("f-string cycle at " + label(b));
      }
      phi_[slot(b, i)] = k;
    }
  }
}

std::optional<int> CrystalGraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<int> CrystalGraph::epsilon_vec(int b) const {
  std::vector<int> out(static_cast<std::size_t>(indices_));
  for (int i = 0; i < indices_; ++i) out[static_cast<std::size_t>(i)] = epsilon(b, i);
  return out;
}

std::vector<int> CrystalGraph::phi_vec(int b) const {
  std::vector<int> out(static_cast<std::size_t>(indices_));
  for (int i = 0; i < indices_; ++i) out[static_cast<std::size_t>(i)] = phi(b, i);
  return out;
}

std::vector<int> CrystalGraph::weight(int b) const {
  std::vector<int> out(static_cast<std::size_t>(indices_));
  for (int i = 0; i < indices_; ++i) out[static_cast<std::size_t>(i)] = phi(b, i) - epsilon(b, i);
  return out;
}

std::vector<Arrow> CrystalGraph::arrows() const {
  std::vector<Arrow> out;
  for (int i = 0; i < indices_; ++i)
    for (int b = 0; b < size(); ++b)
      if (f(b, i) != kAbsent) out.push_back({i, b, f(b, i)});
  return out;
}

std::string CrystalElement::label() const {
  switch (kind) {
    case Kind::Empty:
      return "empty";
    case Kind::Y:
      return "y_" + std::to_string(index);
    case Kind::X:
      break;
  }
  std::string out = "x[";
  for (int k = 1; k <= root.rank(); ++k) {
    if (k > 1) out += ",";
    const int t = root.twice(k);
    out += t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2";
  }
  return out + "]";
}

LevelOneCrystal::LevelOneCrystal(AffineDatum datum, LambdaWeights lambda, std::vector<CrystalElement> elements,
                                 CrystalGraph graph)
    : datum_(std::move(datum)), lambda_(std::move(lambda)), elements_(std::move(elements)), graph_(std::move(graph)) {
  for (int b = 0; b < size(); ++b) {
    const auto& el = element(b);
    if (el.kind == CrystalElement::Kind::X) x_index_.emplace(el.root, b);
  }
}

int LevelOneCrystal::x(const RootVector& alpha) const {
  auto it = x_index_.find(alpha);
  return it == x_index_.end() ? kAbsent : it->second;
}

int LevelOneCrystal::y(int i) const {
  for (int b = 0; b < size(); ++b) {
    const auto& el = element(b);
    if (el.kind == CrystalElement::Kind::Y && el.index == i) return b;
  }
  return kAbsent;
}

AffineWeight LevelOneCrystal::weight_of(int b) const { return {graph_.weight(b), 0}; }
AffineWeight LevelOneCrystal::eps_vec(int b) const { return {graph_.epsilon_vec(b), 0}; }
AffineWeight LevelOneCrystal::phi_vec(int b) const { return {graph_.phi_vec(b), 0}; }

LevelOneCrystal LevelOneCrystal::with_graph(CrystalGraph graph) const {
  if (graph.size() != size()) throw std::invalid_argument("with_graph: vertex count mismatch");
  return LevelOneCrystal(datum_, lambda_, elements_, std::move(graph));
}

LevelOneCrystal build_crystal(const AffineDatum& d) {
  LambdaWeights lw = lambda_weights(d);
  const int n = d.n;

  std::vector<CrystalElement> elements;
  for (const auto& a : lw.positive) elements.push_back(CrystalElement::x(a));
  for (int i : lw.has_y) elements.push_back(CrystalElement::y(i));
  for (const auto& a : lw.positive) elements.push_back(CrystalElement::x(-a));
  elements.push_back(CrystalElement::empty());

  std::unordered_map<RootVector, int, RootVectorHash> x_of;
  std::vector<int> y_of(static_cast<std::size_t>(n + 1), kAbsent);
  for (std::size_t b = 0; b < elements.size(); ++b) {
    if (elements[b].kind == CrystalElement::Kind::X) x_of.emplace(elements[b].root, static_cast<int>(b));
    if (elements[b].kind == CrystalElement::Kind::Y) y_of[static_cast<std::size_t>(elements[b].index)] = static_cast<int>(b);
  }
  const int empty = static_cast<int>(elements.size()) - 1;
  auto lookup = [&](const RootVector& r) {
    auto it = x_of.find(r);
    return it == x_of.end() ? kAbsent : it->second;
  };

  std::vector<Arrow> arrows;
  for (int i = 1; i <= n; ++i) {
    const RootVector ai = RootVector::simple(n, i);
    for (const auto& [alpha, from] : x_of) {
      const int to = lookup(alpha - ai);
      if (to != kAbsent) arrows.push_back({i, from, to});
    }
    if (y_of[static_cast<std::size_t>(i)] != kAbsent) {
      arrows.push_back({i, lookup(ai), y_of[static_cast<std::size_t>(i)]});
      arrows.push_back({i, y_of[static_cast<std::size_t>(i)], lookup(-ai)});
    }
  }
  const RootVector& theta = lw.theta;
  for (const auto& [alpha, from] : x_of) {
    if (alpha == theta || alpha == -theta) continue;
    const RootVector beta = alpha + theta;
    if (beta == theta || beta == -theta) continue;
    const int to = lookup(beta);
    if (to != kAbsent) arrows.push_back({0, from, to});
  }
  arrows.push_back({0, lookup(-theta), empty});
  arrows.push_back({0, empty, lookup(theta)});
  std::sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) {
    return std::tie(a.index, a.from, a.to) < std::tie(b.index, b.from, b.to);
  });

  std::vector<std::string> labels;
  for (const auto& el : elements) labels.push_back(el.label());
  CrystalGraph graph(n + 1, std::move(labels), arrows);
  return LevelOneCrystal(d, std::move(lw), std::move(elements), std::move(graph));
}

std::optional<int> f_tilde(const CrystalGraph& g, int b, int i) {
  const int c = g.f(b, i);
  if (c == kAbsent) return std::nullopt;
  return c;
}

std::optional<int> e_tilde(const CrystalGraph& g, int b, int i) {
  const int c = g.e(b, i);
  if (c == kAbsent) return std::nullopt;
  return c;
}

StringStats string_stats(const CrystalGraph& g, int b, int i) { return {g.epsilon(b, i), g.phi(b, i)}; }

std::string to_dot(const CrystalGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  for (int b = 0; b < g.size(); ++b) out << "  v" << b << " [label=\"" << g.label(b) << "\"];\n";
  for (const auto& a : g.arrows()) {
    out << "  v" << a.from << " -> v" << a.to << " [label=\"" << a.index << "\"";
    if (a.index == 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace affcrystal
