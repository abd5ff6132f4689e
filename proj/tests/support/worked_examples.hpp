#pragma once
// Crystal graphs and the octonion table transcribed by hand from the worked
// examples. Labels follow the library's `x[coeffs]`, `y_i`, `empty` scheme.

#include "oracles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fixtures {

struct GraphFixture {
  std::string type;
  int size;
  oracle::EdgeSet edges;
};

inline std::vector<GraphFixture> example_graphs() {
  return {
      {"A2-1", 9,
       {{"x[1,1]", 1, "x[0,1]"}, {"x[0,1]", 2, "y_2"}, {"x[1,0]", 1, "y_1"}, {"x[-1,0]", 2, "x[-1,-1]"},
        {"x[1,1]", 2, "x[1,0]"}, {"y_2", 2, "x[0,-1]"}, {"y_1", 1, "x[-1,0]"}, {"x[0,-1]", 1, "x[-1,-1]"},
        {"x[-1,0]", 0, "x[0,1]"}, {"x[0,-1]", 0, "x[1,0]"}, {"x[-1,-1]", 0, "empty"}, {"empty", 0, "x[1,1]"}}},
      {"D4-3", 8,
       {{"x[2,1]", 1, "x[1,1]"}, {"x[-1,-1]", 1, "x[-2,-1]"}, {"y_1", 1, "x[-1,0]"}, {"x[1,0]", 1, "y_1"},
        {"x[1,1]", 2, "x[1,0]"}, {"x[-1,-1]", 0, "x[1,0]"}, {"x[-1,0]", 0, "x[1,1]"}, {"x[-1,0]", 2, "x[-1,-1]"},
        {"empty", 0, "x[2,1]"}, {"x[-2,-1]", 0, "empty"}}},
      {"C2-1", 11,
       {{"x[2,1]", 1, "x[1,1]"}, {"x[1,1]", 1, "x[0,1]"}, {"x[1,0]", 1, "y_1"}, {"y_1", 1, "x[-1,0]"},
        {"x[0,-1]", 1, "x[-1,-1]"}, {"x[-1,-1]", 1, "x[-2,-1]"}, {"x[1,1]", 2, "x[1,0]"}, {"x[0,1]", 2, "y_2"},
        {"y_2", 2, "x[0,-1]"}, {"x[-1,0]", 2, "x[-1,-1]"}, {"x[-1,0]", 0, "x[1,1]"}, {"x[-1,-1]", 0, "x[1,0]"},
        {"x[-2,-1]", 0, "empty"}, {"empty", 0, "x[2,1]"}}},
      {"A4-2", 5,
       {{"x[1,1/2]", 1, "x[0,1/2]"}, {"x[0,1/2]", 2, "x[0,-1/2]"}, {"x[0,-1/2]", 1, "x[-1,-1/2]"},
        {"x[-1,-1/2]", 0, "empty"}, {"empty", 0, "x[1,1/2]"}}},
      {"A6-2", 7,
       {{"x[1,1,1/2]", 1, "x[0,1,1/2]"}, {"x[0,1,1/2]", 2, "x[0,0,1/2]"}, {"x[0,0,1/2]", 3, "x[0,0,-1/2]"},
        {"x[0,0,-1/2]", 2, "x[0,-1,-1/2]"}, {"x[0,-1,-1/2]", 1, "x[-1,-1,-1/2]"},
        {"x[-1,-1,-1/2]", 0, "empty"}, {"empty", 0, "x[1,1,1/2]"}}},
  };
}

struct ProductCell {
  std::string left, right;
  std::optional<std::string> product;
};

inline const std::vector<std::string>& octonion_rows() {
  static const std::vector<std::string> rows{"x[2,1]", "x[1,1]", "x[1,0]", "y_1"};
  return rows;
}

inline const std::vector<std::string>& octonion_columns() {
  static const std::vector<std::string> cols{"x[-2,-1]", "x[-1,-1]", "x[-1,0]", "y_1"};
  return cols;
}

/// The 16 displayed cells of the D4-3 (G2) multiplication table.
inline std::vector<ProductCell> octonion_cells() {
  const std::vector<std::vector<std::optional<std::string>>> grid{
      {std::nullopt, "x[1,0]", "x[1,1]", "x[2,1]"},
      {"x[-1,0]", "y_1", std::nullopt, std::nullopt},
      {"x[-1,-1]", std::nullopt, std::nullopt, std::nullopt},
      {"x[-2,-1]", std::nullopt, std::nullopt, std::nullopt},
  };
  std::vector<ProductCell> out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out.push_back({octonion_rows()[r], octonion_columns()[c], grid[r][c]});
  return out;
}

}  // namespace fixtures
