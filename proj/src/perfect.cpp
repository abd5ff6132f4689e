#include "affcrystal/perfect.hpp"

#include "affcrystal/detail/rational_linear.hpp"
#include "affcrystal/tensor.hpp"

#include <algorithm>
#include <numeric>

namespace affcrystal {

namespace {

using detail::Rational;

int pair_with(const std::vector<int>& c, const std::vector<int>& v) {
  return std::inner_product(c.begin(), c.end(), v.begin(), 0);
}

std::vector<int> dominant_coords(const AffineDatum& d, int i) {
  std::vector<int> v(static_cast<std::size_t>(d.size()), 0);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

AxiomResult check_connected(const LevelOneCrystal& b) {
  AxiomResult r{2, "B (x) B is connected", true, true, {}};
  const auto t = tensor_product(b.graph());
  const auto comps = components(t.graph(), false);
  if (comps.count() != 1) {
    r.pass = false;
    r.witness = t.graph().label(comps.members[1].front()) + " lies outside the component of " +
                t.graph().label(0) + " (" + std::to_string(comps.count()) + " components)";
  }
  return r;
}

// wt(b) - wt(x_theta) = sum_{i != 0} k_i alpha_i with d_0 k_i a nonpositive integer.
AxiomResult check_weight_cone(const LevelOneCrystal& b) {
  AxiomResult r{3, "wt(B) in theta + (1/d_0) sum_{i != 0} Z_{<=0} alpha_i, with |B_theta| = 1", true, true, {}};
  const auto& d = b.datum();
  const int n = d.n;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int k = 1; k <= n; ++k)
    for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)] = d.a(k, j);
  const auto top = b.graph().weight(b.x_theta());
  const int d0 = d.marks.front();

  int at_top = 0;
  for (int v = 0; v < b.size() && r.pass; ++v) {
    const auto w = b.graph().weight(v);
    if (w == top) ++at_top;
    std::vector<Rational> rhs;
    for (int k = 1; k <= n; ++k) rhs.emplace_back(w[static_cast<std::size_t>(k)] - top[static_cast<std::size_t>(k)]);
    const auto coeff = detail::solve(m, rhs);
    if (!coeff) {
      r.pass = false;
      r.witness = b.graph().label(v) + ": weight difference not in the root span";
      break;
    }
    for (int j = 1; j <= n; ++j) {
      const Rational scaled = Rational(d0) * (*coeff)[static_cast<std::size_t>(j - 1)];
      if (scaled.denominator() != 1 || scaled.numerator() > 0) {
        r.pass = false;
        r.witness = b.graph().label(v) + ": coefficient of alpha_" + std::to_string(j) + " is " +
                    std::to_string(scaled.numerator()) + "/" + std::to_string(scaled.denominator() * d0);
        break;
      }
    }
    if (!r.pass) break;
    Rational zero_pairing(0);
    for (int j = 1; j <= n; ++j) zero_pairing += Rational(d.a(0, j)) * (*coeff)[static_cast<std::size_t>(j - 1)];
    if (zero_pairing != Rational(w[0] - top[0])) {
      r.pass = false;
      r.witness = b.graph().label(v) + ": h_0 coordinate inconsistent with the classical difference";
    }
  }
  if (r.pass && at_top != 1) {
    r.pass = false;
    r.witness = std::to_string(at_top) + " elements of weight theta";
  }
  return r;
}

AxiomResult check_levels(const LevelOneCrystal& b) {
  AxiomResult r{4, "<c, eps(b)> >= 1 for every b", true, true, {}};
  for (int v = 0; v < b.size(); ++v) {
    if (pair_with(b.datum().comarks, b.graph().epsilon_vec(v)) < 1) {
      r.pass = false;
      r.witness = b.graph().label(v);
      break;
    }
  }
  return r;
}

AxiomResult check_minimal(const LevelOneCrystal& b) {
  AxiomResult r{5, "eps and phi restrict to bijections B_min -> level-1 dominant weights", true, true, {}};
  const auto& d = b.datum();
  const auto& g = b.graph();
  auto fail = [&](std::string w) {
    if (r.pass) r.witness = std::move(w);
    r.pass = false;
  };
  std::vector<int> lambdas;
  for (int i = 0; i <= d.n; ++i)
    if (d.comarks[static_cast<std::size_t>(i)] == 1) lambdas.push_back(i);

  for (bool upper : {true, false}) {
    const char* which = upper ? "eps" : "phi";
    int minimal = 0;
    for (int v = 0; v < b.size(); ++v) {
      const auto vec = upper ? g.epsilon_vec(v) : g.phi_vec(v);
      if (pair_with(d.comarks, vec) == 1) ++minimal;
    }
    for (int i : lambdas) {
      const auto target = dominant_coords(d, i);
      int hits = 0;
      for (int v = 0; v < b.size(); ++v) hits += (upper ? g.epsilon_vec(v) : g.phi_vec(v)) == target;
      if (hits != 1)
        fail(std::string(which) + "^{-1}(Lambda_" + std::to_string(i) + ") has " + std::to_string(hits) +
             " elements");
    }
    if (minimal != static_cast<int>(lambdas.size()))
      fail(std::to_string(minimal) + " elements of " + which + "-level 1 for " + std::to_string(lambdas.size()) +
           " dominant weights");
  }
  return r;
}

}  // namespace

bool PerfectReport::pass() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.pass; });
}

std::vector<MinimalEntry> minimal_elements(const LevelOneCrystal& b) {
  const auto& d = b.datum();
  const auto& g = b.graph();
  std::vector<MinimalEntry> out;
  for (int i = 0; i <= d.n; ++i) {
    if (d.comarks[static_cast<std::size_t>(i)] != 1) continue;
    const auto target = dominant_coords(d, i);
    MinimalEntry e{i};
    int up = 0, low = 0;
    for (int v = 0; v < b.size(); ++v) {
      if (g.epsilon_vec(v) == target && up++ == 0) e.upper = v;
      if (g.phi_vec(v) == target && low++ == 0) e.lower = v;
    }
    if (up != 1) e.upper = kAbsent;
    if (low != 1) e.lower = kAbsent;
    out.push_back(e);
  }
  return out;
}

PerfectReport verify_perfect(const LevelOneCrystal& b) {
  PerfectReport rep;
  rep.type = b.datum().type;
  rep.labels = b.graph().labels();
  rep.axioms.push_back({1, "B is the crystal base of a finite-dimensional U_q'(g)-module (asserted, not machine-verified)",
                        false, true, ""});
  rep.axioms.push_back(check_connected(b));
  rep.axioms.push_back(check_weight_cone(b));
  rep.axioms.push_back(check_levels(b));
  rep.axioms.push_back(check_minimal(b));
  rep.minimal = minimal_elements(b);
  return rep;
}

PerfectReport verify_perfect(const AffineDatum& d) { return verify_perfect(build_crystal(d)); }

std::vector<PerfectReport> verify_sweep(const std::vector<AffineType>& types) {
  std::vector<PerfectReport> out(types.size());
  const long long count = static_cast<long long>(types.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long k = 0; k < count; ++k)
    out[static_cast<std::size_t>(k)] = verify_perfect(build_datum(types[static_cast<std::size_t>(k)]));
  return out;
}

std::vector<PerfectReport> verify_sweep_serial(const std::vector<AffineType>& types) {
  std::vector<PerfectReport> out;
  for (const auto& t : types) out.push_back(verify_perfect(build_datum(t)));
  return out;
}

LevelOneCrystal drop_arrow(const LevelOneCrystal& b, int i, int from) {
  auto arrows = b.graph().arrows();
  std::erase_if(arrows, [&](const Arrow& a) { return a.index == i && a.from == from; });
  return b.with_graph(CrystalGraph(b.graph().num_indices(), b.graph().labels(), arrows));
}

}  // namespace affcrystal
