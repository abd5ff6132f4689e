#pragma once

#include "affcrystal/algebra_energy.hpp"
#include "affcrystal/path_model.hpp"
#include "affcrystal/perfect.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace affcrystal {

using json = nlohmann::ordered_json;

/// [[numerator, denominator], ...] over alpha_1..alpha_n; denominators are 1 or 2.
json root_json(const RootVector& r);
json crystal_json(const LevelOneCrystal& b);
json perfect_json(const PerfectReport& r);

/// Keys "(left,right)" in tensor order.
json energy_table_json(const TensorSquare& t, const std::vector<int>& h);

/// One entry per classical component: smallest maximal vector, size, label and H.
json component_report_json(const TensorSquare& t, const std::vector<ComponentLabel>& labels,
                           const std::vector<int>& h);

/// Rows {left, products: {right: label or null}} over B(theta).
json multiplication_json(const LevelOneCrystal& b, const Psi& psi,
                         const std::vector<std::vector<std::optional<int>>>& table);

/// {classical_weight, delta_degree, multiplicity} sorted by depth, then weight.
json character_json(const Character& ch);

}  // namespace affcrystal
