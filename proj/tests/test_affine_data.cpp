#include "doctest.h"

#include "affcrystal/affine_data.hpp"

#include <set>
#include <stdexcept>

using namespace affcrystal;

namespace {

std::vector<int> times_vector(const std::vector<std::vector<int>>& a, const std::vector<int>& v) {
  std::vector<int> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

std::vector<int> vector_times(const std::vector<int>& v, const std::vector<std::vector<int>>& a) {
  std::vector<int> out(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < v.size(); ++i) out[j] += v[i] * a[i][j];
  return out;
}

std::vector<AffineType> ranks_up_to_six() {
  auto types = sweep_types(6);
  return types;
}

}  // namespace

TEST_CASE("type names parse case-insensitively and print canonically") {
  CHECK(parse_type("a2-1").name() == "A2-1");
  CHECK(parse_type("D4-3") == AffineType{'D', 4, 3});
  CHECK(parse_type("e6-2").name() == "E6-2");
  for (const char* bad : {"Z9-9", "A0-1", "D5-3", "A1-2", "E5-1", "G3-1", "A2", "A2-", "-1", "A2-1x", ""})
    CHECK_THROWS_AS(parse_type(bad), std::invalid_argument);
}

TEST_CASE("the sweep covers every family once") {
  const auto types = sweep_types(5);
  CHECK(types.size() == 27);
  for (const auto& t : types) CHECK(is_valid(t));
  std::set<char> families;
  for (const auto& t : types) families.insert(t.family);
  CHECK(families == std::set<char>{'A', 'B', 'C', 'D', 'E', 'F', 'G'});
}

TEST_CASE("marks and comarks span the null spaces") {
  for (const auto& t : ranks_up_to_six()) {
    CAPTURE(t.name());
    const auto d = build_datum(t);
    CHECK(d.size() == d.n + 1);
    CHECK(times_vector(d.cartan, d.marks) == std::vector<int>(d.cartan.size(), 0));
    CHECK(vector_times(d.comarks, d.cartan) == std::vector<int>(d.cartan.size(), 0));
    CHECK(d.comarks.front() == 1);
    CHECK(d.marks.front() == ((t.family == 'A' && t.twist == 2 && t.rank % 2 == 0) ? 2 : 1));
    for (int i = 0; i <= d.n; ++i) {
      CHECK(d.a(i, i) == 2);
      for (int j = 0; j <= d.n; ++j) {
        CHECK(d.symmetrizers[i] * d.a(i, j) == d.symmetrizers[j] * d.a(j, i));
        CHECK((d.a(i, j) == 0) == (d.a(j, i) == 0));
      }
    }
  }
}

TEST_CASE("canonical central elements from the worked examples") {
  CHECK(build_datum(parse_type("A2-1")).comarks == std::vector<int>{1, 1, 1});
  CHECK(build_datum(parse_type("D4-3")).comarks == std::vector<int>{1, 2, 3});
  CHECK(build_datum(parse_type("C2-1")).comarks == std::vector<int>{1, 1, 1});
  const auto a42 = build_datum(parse_type("A4-2"));
  CHECK(a42.comarks == std::vector<int>{1, 2, 2});
  CHECK(a42.marks.front() == 2);
  CHECK(build_datum(parse_type("A6-2")).comarks == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("finite algebra attached to each family") {
  CHECK(build_datum(parse_type("A4-2")).finite_type.name() == "C2");
  CHECK(build_datum(parse_type("A5-2")).finite_type.name() == "C3");
  CHECK(build_datum(parse_type("D4-2")).finite_type.name() == "B3");
  CHECK(build_datum(parse_type("E6-2")).finite_type.name() == "F4^t");
  CHECK(build_datum(parse_type("D4-3")).finite_type.name() == "G2");
  CHECK(build_datum(parse_type("C3-1")).finite_type.name() == "C3");
  CHECK(build_datum(parse_type("E8-1")).finite_type.name() == "E8");
}

TEST_CASE("node 0 attaches where the diagrams put it") {
  CHECK(build_datum(parse_type("E6-1")).neighbors(0) == std::vector<int>{6});
  CHECK(build_datum(parse_type("F4-1")).neighbors(0) == std::vector<int>{1});
  CHECK(build_datum(parse_type("A3-1")).neighbors(0) == std::vector<int>{1, 3});
  CHECK(build_datum(parse_type("C3-1")).neighbors(0) == std::vector<int>{1});
  CHECK(build_datum(parse_type("D4-3")).neighbors(0) == std::vector<int>{1});
}

TEST_CASE("levels") {
  const auto a21 = build_datum(parse_type("A2-1"));
  const auto d43 = build_datum(parse_type("D4-3"));
  CHECK(level(fundamental_weight(a21, 0), a21) == 1);
  CHECK(level(fundamental_weight(d43, 0), d43) == 1);
  CHECK(level(fundamental_weight(a21, 1), a21) == 1);
  CHECK(level(fundamental_weight(d43, 2), d43) == 3);
  for (int i = 1; i <= a21.n; ++i) CHECK(level(AffineWeight{simple_root_lambda(a21, i), 0}, a21) == 0);
}

TEST_CASE("level-one dominant weights") {
  auto indices = [](const char* t) {
    std::vector<int> out;
    const auto d = build_datum(parse_type(t));
    for (const auto& w : level_one_dominants(d))
      for (int i = 0; i <= d.n; ++i)
        if (w.lambda[i] == 1) out.push_back(i);
    return out;
  };
  CHECK(indices("A2-1") == std::vector<int>{0, 1, 2});
  CHECK(indices("D4-3") == std::vector<int>{0});
  CHECK(indices("C2-1") == std::vector<int>{0, 1, 2});
  CHECK(indices("E8-1") == std::vector<int>{0});
  CHECK(indices("A4-2") == std::vector<int>{0});
}
