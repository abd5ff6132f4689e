#include "affcrystal/serialize.hpp"

namespace affcrystal {

namespace {

const char* kind_name(CrystalElement::Kind k) {
  switch (k) {
    case CrystalElement::Kind::X: return "x";
    case CrystalElement::Kind::Y: return "y";
    case CrystalElement::Kind::Empty: return "empty";
  }
  return "?";
}

}  // namespace

json root_json(const RootVector& r) {
  json out = json::array();
  for (int t : r.twice_coeffs()) out.push_back(t % 2 == 0 ? json::array({t / 2, 1}) : json::array({t, 2}));
  return out;
}

json crystal_json(const LevelOneCrystal& b) {
  const auto& g = b.graph();
  json elements = json::array();
  for (int v = 0; v < b.size(); ++v) {
    const auto& el = b.element(v);
    json e{{"label", g.label(v)}, {"kind", kind_name(el.kind)}};
    if (el.kind == CrystalElement::Kind::X) e["root"] = root_json(el.root);
    if (el.kind == CrystalElement::Kind::Y) e["index"] = el.index;
    e["weight"] = g.weight(v);
    e["epsilon"] = g.epsilon_vec(v);
    e["phi"] = g.phi_vec(v);
    elements.push_back(std::move(e));
  }
  json arrows = json::array();
  for (const auto& a : g.arrows()) arrows.push_back({{"i", a.index}, {"from", g.label(a.from)}, {"to", g.label(a.to)}});
  return {{"type", b.datum().type.name()}, {"size", b.size()}, {"elements", elements}, {"arrows", arrows}};
}

json perfect_json(const PerfectReport& r) {
  json axioms = json::array();
  for (const auto& a : r.axioms) {
    json j{{"axiom", a.number}, {"statement", a.statement}, {"checked", a.checked}, {"pass", a.pass}};
    if (!a.witness.empty()) j["witness"] = a.witness;
    axioms.push_back(std::move(j));
  }
  auto name = [&](int v) { return v == kAbsent ? json(nullptr) : json(r.labels[static_cast<std::size_t>(v)]); };
  json minimal = json::array();
  for (const auto& m : r.minimal)
    minimal.push_back({{"lambda", "L" + std::to_string(m.index)}, {"upper", name(m.upper)}, {"lower", name(m.lower)}});
  return {{"type", r.type.name()}, {"pass", r.pass()}, {"axioms", axioms}, {"minimal_elements", minimal}};
}

json energy_table_json(const TensorSquare& t, const std::vector<int>& h) {
  json out = json::object();
  for (int v = 0; v < t.size(); ++v) out[t.graph().label(v)] = h[static_cast<std::size_t>(v)];
  return out;
}

json component_report_json(const TensorSquare& t, const std::vector<ComponentLabel>& labels,
                           const std::vector<int>& h) {
  const auto comps = components(t.graph(), true);
  std::vector<int> rep(static_cast<std::size_t>(comps.count()), kAbsent);
  for (int v : maximal_vectors(t.graph())) {
    auto& slot = rep[static_cast<std::size_t>(comps.component_of[static_cast<std::size_t>(v)])];
    if (slot == kAbsent) slot = v;
  }
  json out = json::array();
  for (int c = 0; c < comps.count(); ++c) {
    const int first = comps.members[static_cast<std::size_t>(c)].front();
    const int v = rep[static_cast<std::size_t>(c)];
    out.push_back({{"representative_maximal_vector", v == kAbsent ? json(nullptr) : json(t.graph().label(v))},
                   {"size", comps.members[static_cast<std::size_t>(c)].size()},
                   {"label", labels[static_cast<std::size_t>(first)].to_string()},
                   {"energy", h[static_cast<std::size_t>(first)]}});
  }
  return out;
}

json multiplication_json(const LevelOneCrystal& b, const Psi& psi,
                         const std::vector<std::vector<std::optional<int>>>& table) {
  const auto& g = b.graph();
  json rows = json::array();
  for (int l = 0; l < b.size(); ++l) {
    if (!b.is_theta_part(l)) continue;
    json products = json::object();
    for (int r = 0; r < b.size(); ++r) {
      if (!b.is_theta_part(r)) continue;
      const auto& cell = table[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
      products[g.label(r)] = cell ? json(g.label(*cell)) : json(nullptr);
    }
    rows.push_back({{"left", g.label(l)}, {"products", products}});
  }
  return {{"type", b.datum().type.name()}, {"index", psi.i}, {"rows", rows}};
}

json character_json(const Character& ch) {
  json out = json::array();
  for (const auto& [w, m] : sorted_character(ch))
    out.push_back({{"classical_weight", w.lambda}, {"delta_degree", w.delta}, {"multiplicity", m}});
  return out;
}

}  // namespace affcrystal
