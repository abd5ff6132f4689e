#include "doctest.h"

#include "affcrystal/path_model.hpp"
#include "support/oracles.hpp"

using namespace affcrystal;

namespace {

PathModel model_of(const char* t) { return PathModel(build_crystal(build_datum(parse_type(t)))); }

std::int64_t multiplicity(const Character& ch, const AffineWeight& w) {
  const auto it = ch.find(w);
  return it == ch.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("ground states") {
  for (const char* name : {"A1-1", "A2-1", "D4-3", "E6-1", "C3-1"}) {
    const auto m = model_of(name);
    const auto& g0 = m.ground_state(0);
    CHECK(g0.elements == std::vector<int>{m.crystal().empty()});
    CHECK(g0.period == 1);
    for (int i : m.dominants()) {
      const auto& gs = m.ground_state(i);
      CHECK(gs.at(0) == (i == 0 ? m.crystal().empty() : m.crystal().y(i)));
      CHECK(static_cast<std::size_t>(gs.period) <= m.dominants().size());
      for (std::size_t k = 0; k < 6; ++k) {
        const auto eps = m.crystal().graph().epsilon_vec(gs.at(k));
        CHECK(eps[gs.weight_at(k + 1)] == 1);
      }
    }
  }
  CHECK_THROWS_AS(model_of("D4-3").ground_state(1), std::invalid_argument);
}

TEST_CASE("Kashiwara operators on paths") {
  const auto m = model_of("A1-1");
  const auto g = m.ground_path(0);
  const auto p = m.f(g, 0);
  REQUIRE(p.has_value());
  CHECK(p->prefix == std::vector<int>{m.crystal().x_theta()});
  for (int i = 0; i <= 1; ++i) CHECK_FALSE(m.e(g, i).has_value());
  CHECK(m.e(*p, 0) == g);
  CHECK_FALSE(m.f(g, 1).has_value());
}

TEST_CASE("path statistics") {
  const auto m = model_of("A2-1");
  const auto g = m.ground_path(0);
  for (int i = 0; i <= 2; ++i) CHECK(m.stats(g, i).epsilon == 0);
  CHECK(m.stats(g, 0).phi == 1);
  CHECK(m.stats(g, 1).phi == 0);
  const auto g1 = m.ground_path(1);
  CHECK(m.stats(g1, 1) == StringStats{0, 1});
}

TEST_CASE("path statistics match the folded tensor on materialized prefixes") {
  const auto m = model_of("C2-1");
  const auto& gr = m.crystal().graph();
  const int size = m.crystal().size();
  for (int lambda : m.dominants()) {
    const auto& gs = m.ground_state(lambda);
    for (int depth = 1; depth <= 3; ++depth) {
      std::vector<int> prefix(static_cast<std::size_t>(depth), 0);
      for (;;) {
        if (prefix.back() != gs.at(prefix.size() - 1)) {
          const Path p{lambda, prefix};
          for (int i = 0; i <= m.crystal().datum().n; ++i) {
            // tail (x) p_{N-1} (x) ... (x) p_0 with the tail as a highest-weight element
            std::vector<StringStats> factors{{0, gr.phi(gs.at(prefix.size()), i)}};
            for (std::size_t k = prefix.size(); k-- > 0;) factors.push_back({gr.epsilon(prefix[k], i), gr.phi(prefix[k], i)});
            CHECK(m.stats(p, i) == oracle::fold_stats(factors));
          }
        }
        std::size_t k = 0;
        while (k < prefix.size() && prefix[k] == size - 1) prefix[k++] = 0;
        if (k == prefix.size()) break;
        ++prefix[k];
      }
    }
  }
}

TEST_CASE("affine weights of short paths") {
  const auto m = model_of("A1-1");
  const auto& d = m.crystal().datum();
  CHECK(m.weight(m.ground_path(0)) == fundamental_weight(d, 0));
  const Path p{0, {m.crystal().x_theta()}};
  AffineWeight want = fundamental_weight(d, 0);
  const auto alpha1 = simple_root_lambda(d, 1);
  for (std::size_t j = 0; j < want.lambda.size(); ++j) want.lambda[j] += alpha1[j];
  want.delta = -1;
  CHECK(m.weight(p) == want);
}

TEST_CASE("character multiplicities of L(Lambda_0)") {
  const auto m = model_of("A1-1");
  const auto ch = character(m, 0, 5);
  const auto& d = m.crystal().datum();
  const auto l0 = fundamental_weight(d, 0);
  CHECK(multiplicity(ch, l0) == 1);
  const std::vector<std::int64_t> want{1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n) CHECK(multiplicity(ch, AffineWeight{l0.lambda, -n}) == want[n - 1]);

  const auto a2 = model_of("A2-1");
  const auto l0a2 = fundamental_weight(a2.crystal().datum(), 0);
  CHECK(multiplicity(character(a2, 0, 1), AffineWeight{l0a2.lambda, -1}) == 2);
}

TEST_CASE("parallel, serial and reversed generation agree") {
  for (const char* name : {"A2-1", "C2-1", "D4-3", "A4-2", "B3-1"}) {
    const auto m = model_of(name);
    for (int lambda : m.dominants()) {
      const auto a = character(m, lambda, 3);
      CHECK(a == character_serial(m, lambda, 3, false));
      CHECK(a == character_serial(m, lambda, 3, true));
    }
  }
}

TEST_CASE("lattice oracle") {
  const auto a1 = build_datum(parse_type("A1-1"));
  CHECK(oracle_multiplicity(a1, {0}, 4) == 5);
  CHECK(oracle_multiplicity(a1, {1}, 1) == 1);
  CHECK(oracle_multiplicity(a1, {2}, 3) == 0);
  CHECK_THROWS_AS(oracle_multiplicity(build_datum(parse_type("C2-1")), {0, 0}, 1), std::invalid_argument);
  CHECK_FALSE(oracle_supported(build_datum(parse_type("D4-3"))));
  CHECK(oracle_supported(build_datum(parse_type("E7-1"))));

  const auto series = oracle::colored_partition_numbers(4, 8);
  const auto d4 = build_datum(parse_type("D4-1"));
  for (int n = 0; n <= 8; ++n) CHECK(oracle_multiplicity(d4, {0, 0, 0, 0}, n) == series[n]);
}

TEST_CASE("root-lattice coordinates invert the classical weight") {
  const auto d = build_datum(parse_type("A3-1"));
  const auto beta = root_lattice_coordinates(d, {1, 0, 0, 0});
  REQUIRE(beta.has_value());
  CHECK(*beta == std::vector<int>{0, 0, 0});
  const auto w = fundamental_weight(d, 0);
  auto shifted = w.lambda;
  const auto a2 = simple_root_lambda(d, 2);
  for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] -= a2[j];
  CHECK(root_lattice_coordinates(d, shifted) == std::vector<int>{0, -1, 0});
  CHECK_FALSE(root_lattice_coordinates(d, {0, 1, 0, 0}).has_value());
}

TEST_CASE("paths reproduce the lattice character") {
  for (auto [name, depth] : {std::pair{"A1-1", 5}, {"A2-1", 4}, {"A3-1", 3}, {"D4-1", 2}}) {
    CAPTURE(name);
    const auto m = model_of(name);
    CHECK(character(m, 0, depth) == oracle_character(m.crystal().datum(), depth));
  }
}

TEST_CASE("sorted character starts at the highest weight") {
  const auto m = model_of("A2-1");
  const auto rows = sorted_character(character(m, 0, 2));
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.front().first == fundamental_weight(m.crystal().datum(), 0));
  CHECK(rows.front().second == 1);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(rows[k - 1].first.delta >= rows[k].first.delta);
}
