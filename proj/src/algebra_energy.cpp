#include "affcrystal/algebra_energy.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <tuple>
#include <unordered_set>

namespace affcrystal {

namespace {

using Kind = CrystalElement::Kind;

RootVector range_sum(int n, int from, int to) {
  RootVector r(n);
  for (int k = from; k <= to; ++k) r += RootVector::simple(n, k);
  return r;
}

RootVector path_sum(int n, const std::vector<int>& nodes) {
  RootVector r(n);
  for (int k : nodes) r += RootVector::simple(n, k);
  return r;
}

bool is_type(const AffineDatum& d, char family, int twist) { return d.type.family == family && d.type.twist == twist; }

class PsiBuilder {
 public:
  PsiBuilder(const LevelOneCrystal& b, const TensorSquare& t, int i)
      : b_(b), t_(t), n_(b.datum().n), i_(i), image_(static_cast<std::size_t>(b.size()), kAbsent) {}

  int x(const RootVector& r) const {
    const int v = b_.x(r);
    if (v == kAbsent) throw std::logic_error("Psi image x_{" + r.to_string() + "} is outside Lambda");
    return v;
  }
  int y(int j) const { return b_.y(j); }

  // Images of negatives swap and negate the factors of the positive image.
  int sigma(int v) const {
    const auto& el = b_.element(v);
    return el.kind == Kind::X ? x(-el.root) : v;
  }

  void set_positive(const RootVector& gamma, int left, int right) {
    image_[static_cast<std::size_t>(x(gamma))] = t_.index(left, right);
    image_[static_cast<std::size_t>(x(-gamma))] = t_.index(sigma(right), sigma(left));
  }
  void set_y(int j, int left, int right) { image_[static_cast<std::size_t>(y(j))] = t_.index(left, right); }

  Psi take() { return {i_, std::move(image_)}; }

 private:
  const LevelOneCrystal& b_;
  const TensorSquare& t_;
  int n_;
  int i_;
  std::vector<int> image_;
};

// Contiguous support [first, last] of gamma, which must have all coefficients 0 or 1.
std::pair<int, int> interval(const RootVector& gamma) {
  const auto supp = gamma.support();
  return {supp.front(), supp.back()};
}

void psi_type_a(PsiBuilder& p, const LambdaWeights& lw, int n, int i) {
  for (const auto& gamma : lw.positive) {
    const auto [j, k] = interval(gamma);
    if (i == 1) {
      if (j == 1) {
        p.set_positive(gamma, p.x(gamma), p.y(1));
      } else {
        p.set_positive(gamma, p.x(range_sum(n, 1, k)), p.x(-range_sum(n, 1, j - 1)));
      }
    } else if (k == n) {
      p.set_positive(gamma, p.x(gamma), p.y(n));
    } else {
      p.set_positive(gamma, p.x(range_sum(n, j, n)), p.x(-range_sum(n, k + 1, n)));
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (j == i) {
      p.set_y(j, p.y(j), p.y(j));
    } else {
      const RootVector s = i == 1 ? range_sum(n, 1, j - 1) : range_sum(n, j + 1, n);
      p.set_y(j, p.x(s), p.x(-s));
    }
  }
}

void psi_type_c(PsiBuilder& p, const LambdaWeights& lw, int n) {
  for (const auto& gamma : lw.positive) {
    const auto supp = gamma.support();
    const int j = supp.front();
    int k = 0;
    for (int m = 1; m <= n && k == 0; ++m)
      if (gamma.twice(m) == 4) k = m;
    RootVector left(n);
    if (k == 0) {
      left = range_sum(n, 1, supp.back());
    } else {
      left = range_sum(n, 1, k - 1) + 2 * range_sum(n, k, n - 1) + RootVector::simple(n, n);
    }
    if (j == 1) {
      p.set_positive(gamma, p.x(left), p.y(1));
    } else {
      p.set_positive(gamma, p.x(left), p.x(-range_sum(n, 1, j - 1)));
    }
  }
  p.set_y(1, p.y(1), p.y(1));
  for (int j = 2; j <= n; ++j) {
    const RootVector s = range_sum(n, 1, j - 1);
    p.set_y(j, p.x(s), p.x(-s));
  }
}

void psi_general(PsiBuilder& p, const LevelOneCrystal& b, int i) {
  const AffineDatum& d = b.datum();
  const int n = d.n;
  const LambdaWeights& lw = b.lambda();
  const RootVector& theta = lw.theta;
  for (const auto& gamma : lw.positive) {
    const int grade = gamma.twice(i) / 2;
    if (grade == 2) {
      p.set_positive(gamma, p.x(theta), p.y(i));
    } else if (grade == 1) {
      p.set_positive(gamma, p.x(theta), p.x(gamma - theta));
    } else {
      const RootVector alpha = path_sum(n, connect_support(d, gamma, i));
      const RootVector beta = theta - gamma - alpha;
      p.set_positive(gamma, p.x(theta - alpha), p.x(-beta));
    }
  }
  for (int j : lw.has_y) {
    const RootVector s = path_sum(n, dynkin_path(d, i, j));
    p.set_y(j, p.x(theta - s), p.x(s - theta));
  }
}

bool in_lambda(const LevelOneCrystal& b, const RootVector& r) {
  if (r.is_zero()) return !b.lambda().has_y.empty();
  return b.x(r) != kAbsent;
}

}  // namespace

std::vector<int> psi_indices(const LevelOneCrystal& b) {
  std::vector<int> out;
  for (int i : b.lambda().has_y)
    if (b.datum().adjacent(0, i)) out.push_back(i);
  return out;
}

Psi build_psi(const LevelOneCrystal& b, const TensorSquare& t, int i) {
  const auto valid = psi_indices(b);
  if (std::find(valid.begin(), valid.end(), i) == valid.end()) {
    std::string choices;
    for (int v : valid) choices += (choices.empty() ? "" : ", ") + std::to_string(v);
    throw std::invalid_argument("no Psi for " + b.datum().type.name() + " at i=" + std::to_string(i) +
                                "; valid choices: {" + choices + "}");
  }
  PsiBuilder p(b, t, i);
  const AffineDatum& d = b.datum();
  if (is_type(d, 'A', 1)) {
    psi_type_a(p, b.lambda(), d.n, i);
  } else if (is_type(d, 'C', 1)) {
    psi_type_c(p, b.lambda(), d.n);
  } else {
    psi_general(p, b, i);
  }
  return p.take();
}

Psi propagate_psi(const LevelOneCrystal& b, const TensorSquare& t, int i) {
  const CrystalGraph& g = b.graph();
  const CrystalGraph& tg = t.graph();
  Psi psi{i, std::vector<int>(static_cast<std::size_t>(b.size()), kAbsent)};
  const int start = b.x_theta();
  psi.image[static_cast<std::size_t>(start)] = t.index(start, b.y(i));
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int w = psi.image[static_cast<std::size_t>(v)];
    for (int k = 1; k < g.num_indices(); ++k) {
      for (const auto& [next, moved] : {std::pair{g.f(v, k), tg.f(w, k)}, std::pair{g.e(v, k), tg.e(w, k)}}) {
        if (next == kAbsent || moved == kAbsent || psi.image[static_cast<std::size_t>(next)] != kAbsent) continue;
        psi.image[static_cast<std::size_t>(next)] = moved;
        queue.push_back(next);
      }
    }
  }
  return psi;
}

PsiCheck verify_psi(const LevelOneCrystal& b, const TensorSquare& t, const Psi& psi) {
  const CrystalGraph& g = b.graph();
  const CrystalGraph& tg = t.graph();
  auto fail = [](std::string why) { return PsiCheck{false, std::move(why)}; };
  if (static_cast<int>(psi.image.size()) != b.size()) return fail("image size mismatch");

  std::unordered_set<int> hit;
  for (int v = 0; v < b.size(); ++v) {
    if (!b.is_theta_part(v)) continue;
    const int w = psi.image[static_cast<std::size_t>(v)];
    if (w == kAbsent) return fail("no image for " + g.label(v));
    if (!hit.insert(w).second) return fail("not injective at " + g.label(v) + " -> " + tg.label(w));
    std::vector<int> tensor_weight = tg.weight(w);
    if (g.weight(v) != tensor_weight) return fail("weight differs at " + g.label(v) + " -> " + tg.label(w));
    for (int k = 1; k < g.num_indices(); ++k) {
      const std::string at = g.label(v) + ", k=" + std::to_string(k);
      if (g.epsilon(v, k) != tg.epsilon(w, k) || g.phi(v, k) != tg.phi(w, k)) return fail("string lengths differ at " + at);
      for (const auto& [next, moved, op] : {std::tuple{g.f(v, k), tg.f(w, k), "f"}, std::tuple{g.e(v, k), tg.e(w, k), "e"}}) {
        const int expected = next == kAbsent ? kAbsent : psi.image[static_cast<std::size_t>(next)];
        if (expected != moved) return fail(std::string("does not commute with ") + op + " at " + at);
      }
    }
  }
  const auto classical = components(tg, true);
  const int comp = classical.component_of[static_cast<std::size_t>(t.index(b.x_theta(), b.y(psi.i)))];
  const auto& members = classical.members[static_cast<std::size_t>(comp)];
  if (members.size() != hit.size()) return fail("image is not the whole component of x_theta (x) y_i");
  for (int m : members)
    if (!hit.contains(m)) return fail("component element " + tg.label(m) + " is not an image");
  return {};
}

std::optional<int> multiply(const TensorSquare& t, const Psi& psi, int b1, int b2) {
  const int target = t.index(b1, b2);
  for (std::size_t v = 0; v < psi.image.size(); ++v)
    if (psi.image[v] == target) return static_cast<int>(v);
  return std::nullopt;
}

std::vector<std::vector<std::optional<int>>> multiplication_table(const LevelOneCrystal& b, const TensorSquare& t,
                                                                  const Psi& psi) {
  std::vector<int> preimage(static_cast<std::size_t>(t.size()), kAbsent);
  for (std::size_t v = 0; v < psi.image.size(); ++v)
    if (psi.image[v] != kAbsent) preimage[static_cast<std::size_t>(psi.image[v])] = static_cast<int>(v);
  const int m = b.size() - 1;
  std::vector<std::vector<std::optional<int>>> out(static_cast<std::size_t>(m));
  for (int b1 = 0; b1 < m; ++b1) {
    for (int b2 = 0; b2 < m; ++b2) {
      const int v = preimage[static_cast<std::size_t>(t.index(b1, b2))];
      out[static_cast<std::size_t>(b1)].push_back(v == kAbsent ? std::nullopt : std::optional<int>(v));
    }
  }
  return out;
}

std::vector<int> energy_propagate(const TensorSquare& t, int anchor, int anchor_value) {
  const CrystalGraph& base = t.base();
  const CrystalGraph& g = t.graph();
  constexpr int kUnset = INT_MIN;
  std::vector<int> h(static_cast<std::size_t>(g.size()), kUnset);
  // Change of H under e_0 applied at v.
  auto step = [&](int v) {
    const TensorElement el = t.element(v);
    return base.phi(el.left, 0) >= base.epsilon(el.right, 0) ? 1 : -1;
  };
  auto assign = [&](int from, int to, int value, int i) {
    auto& slot = h[static_cast<std::size_t>(to)];
    if (slot == kUnset) {
      slot = value;
      return true;
    }
    if (slot != value) {
      throw EnergyInconsistency("energy is not well defined: " + g.label(from) + " -" + std::to_string(i) + "- " +
                                g.label(to) + " implies H=" + std::to_string(value) + " but another path gives " +
                                std::to_string(slot));
    }
    return false;
  };

  h[static_cast<std::size_t>(anchor)] = anchor_value;
  std::deque<int> queue{anchor};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int hv = h[static_cast<std::size_t>(v)];
    for (int i = 0; i < g.num_indices(); ++i) {
      // v = e_i(u) for u = f_i(v), so H(v) = H(u) + step(u).
      if (const int u = g.f(v, i); u != kAbsent) {
        if (assign(v, u, i == 0 ? hv - step(u) : hv, i)) queue.push_back(u);
      }
      if (const int u = g.e(v, i); u != kAbsent) {
        if (assign(v, u, i == 0 ? hv + step(v) : hv, i)) queue.push_back(u);
      }
    }
  }
  for (int v = 0; v < g.size(); ++v)
    if (h[static_cast<std::size_t>(v)] == kUnset)
      throw EnergyInconsistency("energy undefined at " + g.label(v) + ": not connected to the anchor");
  return h;
}

std::vector<int> energy_propagate(const LevelOneCrystal& b, const TensorSquare& t) {
  return energy_propagate(t, t.index(b.empty(), b.empty()), 0);
}

std::string ComponentLabel::to_string() const {
  switch (kind) {
    case ComponentKind::EmptyEmpty: return "EmptyEmpty";
    case ComponentKind::ThetaMinusTheta: return "ThetaMinusTheta";
    case ComponentKind::LeftEmpty: return "LeftEmpty";
    case ComponentKind::RightEmpty: return "RightEmpty";
    case ComponentKind::TwoTheta: return "TwoTheta";
    case ComponentKind::ThetaComp: return "ThetaComp(" + std::to_string(index) + ")";
    case ComponentKind::Generic: return "Generic";
  }
  return "Generic";
}

bool two_theta_predicate(const LevelOneCrystal& b, int b1, int b2) {
  const auto& e1 = b.element(b1);
  const auto& e2 = b.element(b2);
  const AffineDatum& d = b.datum();
  const int n = d.n;
  if (e1.kind == Kind::X && e2.kind == Kind::X) return leq(e1.root, e2.root);
  // y_i (x) x_beta and x_{-alpha} (x) y_i with theta(h_i) > 0 and beta - alpha_i in Lambda.
  auto y_condition = [&](int i, const RootVector& positive) {
    return b.lambda().theta.pairing(d, i) > 0 && positive.nonnegative() &&
           in_lambda(b, positive - RootVector::simple(n, i));
  };
  if (e1.kind == Kind::Y && e2.kind == Kind::X) return y_condition(e1.index, e2.root);
  if (e1.kind == Kind::X && e2.kind == Kind::Y) return y_condition(e2.index, -e1.root);
  return false;
}

std::vector<ComponentLabel> classify_components(const LevelOneCrystal& b, const TensorSquare& t) {
  std::vector<ComponentLabel> out(static_cast<std::size_t>(t.size()));
  std::vector<int> theta_comp(static_cast<std::size_t>(t.size()), 0);
  for (int i : psi_indices(b)) {
    for (int w : build_psi(b, t, i).image)
      if (w != kAbsent) theta_comp[static_cast<std::size_t>(w)] = i;
  }
  const auto classical = components(t.graph(), true);
  const int two_theta = classical.component_of[static_cast<std::size_t>(t.index(b.x_theta(), b.x_theta()))];
  const int empty = b.empty();

  for (int v = 0; v < t.size(); ++v) {
    const auto [l, r] = t.element(v);
    auto& label = out[static_cast<std::size_t>(v)];
    if (l == empty && r == empty) {
      label.kind = ComponentKind::EmptyEmpty;
    } else if (l == empty) {
      label.kind = ComponentKind::LeftEmpty;
    } else if (r == empty) {
      label.kind = ComponentKind::RightEmpty;
    } else if (l == b.x_theta() && r == b.x_minus_theta()) {
      label.kind = ComponentKind::ThetaMinusTheta;
    } else if (theta_comp[static_cast<std::size_t>(v)] != 0) {
      label = {ComponentKind::ThetaComp, theta_comp[static_cast<std::size_t>(v)]};
    } else if (two_theta_predicate(b, l, r)) {
      label.kind = ComponentKind::TwoTheta;
    } else if ((b.element(l).kind == Kind::Y || b.element(r).kind == Kind::Y) &&
               classical.component_of[static_cast<std::size_t>(v)] == two_theta) {
      label.kind = ComponentKind::TwoTheta;
    } else {
      label.kind = ComponentKind::Generic;
    }
  }
  return out;
}

int energy_of(const ComponentLabel& label) {
  switch (label.kind) {
    case ComponentKind::EmptyEmpty:
    case ComponentKind::ThetaMinusTheta:
    case ComponentKind::ThetaComp:
      return 0;
    case ComponentKind::TwoTheta:
      return 2;
    case ComponentKind::LeftEmpty:
    case ComponentKind::RightEmpty:
    case ComponentKind::Generic:
      return 1;
  }
  return 1;
}

std::vector<int> energy_by_classification(const LevelOneCrystal& b, const TensorSquare& t) {
  const auto labels = classify_components(b, t);
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(energy_of(l));
  return out;
}

std::vector<int> energy_by_maximal_vectors(const LevelOneCrystal& b, const TensorSquare& t) {
  const auto classical = components(t.graph(), true);
  const int theta = b.x_theta();
  const int empty = b.empty();
  std::vector<int> value(static_cast<std::size_t>(classical.count()), INT_MIN);
  for (int v : maximal_vectors(t.graph())) {
    const auto [l, r] = t.element(v);
    const auto& right = b.element(r);
    int h = 0;
    if (l == empty) {
      h = r == empty ? 0 : 1;
    } else if (l != theta) {
      throw std::logic_error("unexpected maximal vector " + t.graph().label(v));
    } else if (r == empty) {
      h = 1;
    } else if (right.kind == Kind::Y) {
      h = 0;
    } else if (r == theta) {
      h = 2;
    } else {
      const RootVector gap = b.lambda().theta - right.root;
      h = gap.nonnegative() && b.x(gap) != kAbsent ? 1 : 0;
    }
    auto& slot = value[static_cast<std::size_t>(classical.component_of[static_cast<std::size_t>(v)])];
    if (slot != INT_MIN) throw std::logic_error("two maximal vectors in the component of " + t.graph().label(v));
    slot = h;
  }
  std::vector<int> out(static_cast<std::size_t>(t.size()));
  for (int v = 0; v < t.size(); ++v) {
    const int h = value[static_cast<std::size_t>(classical.component_of[static_cast<std::size_t>(v)])];
    if (h == INT_MIN) throw std::logic_error("no maximal vector in the component of " + t.graph().label(v));
    out[static_cast<std::size_t>(v)] = h;
  }
  return out;
}

CrystalGraph three_box_crystal() {
  return CrystalGraph(3, {"1", "2", "3"}, {{1, 0, 1}, {2, 1, 2}, {0, 2, 0}});
}

FixtureCheck fixture_energy_check() {
  const TensorSquare t = tensor_product_serial(three_box_crystal());
  FixtureCheck out;
  // H(1 (x) 2) = 0 by the closed form.
  const auto h = energy_propagate(t, t.index(0, 1), 0);
  out.table.assign(3, std::vector<int>(3, 0));
  for (int a = 0; a < 3; ++a) {
    for (int c = 0; c < 3; ++c) {
      const int got = h[static_cast<std::size_t>(t.index(a, c))];
      const int want = a >= c ? 1 : 0;
      out.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = got;
      if (got != want) {
        out.ok = false;
        out.mismatches.push_back("H(" + std::to_string(a + 1) + " (x) " + std::to_string(c + 1) + ") = " +
                                 std::to_string(got) + ", expected " + std::to_string(want));
      }
    }
  }
  return out;
}

}  // namespace affcrystal
