#include "doctest.h"

#include "affcrystal/perfect.hpp"

using namespace affcrystal;

namespace {

std::string name_of(const PerfectReport& r, int v) { return v == kAbsent ? "?" : r.labels[static_cast<std::size_t>(v)]; }

}  // namespace

TEST_CASE("every swept family is perfect of level 1") {
  const auto types = sweep_types(5);
  const auto reports = verify_sweep(types);
  REQUIRE(reports.size() == types.size());
  for (const auto& r : reports) {
    CAPTURE(r.type.name());
    CHECK(r.pass());
    REQUIRE(r.axioms.size() == 5);
    CHECK_FALSE(r.axioms.front().checked);
    for (std::size_t k = 1; k < 5; ++k) CHECK(r.axioms[k].checked);
  }
}

TEST_CASE("parallel sweep equals the serial sweep") {
  const auto types = sweep_types(4);
  const auto a = verify_sweep(types);
  const auto b = verify_sweep_serial(types);
  for (std::size_t k = 0; k < types.size(); ++k) {
    CHECK(a[k].type == b[k].type);
    CHECK(a[k].pass() == b[k].pass());
    CHECK(a[k].minimal.size() == b[k].minimal.size());
  }
}

TEST_CASE("minimal elements: empty for Lambda_0, y_i for the other level-1 weights") {
  for (const auto& t : sweep_types(5)) {
    CAPTURE(t.name());
    const auto r = verify_perfect(build_datum(t));
    for (const auto& m : r.minimal) {
      const std::string want = m.index == 0 ? "empty" : "y_" + std::to_string(m.index);
      CHECK(name_of(r, m.upper) == want);
      CHECK(name_of(r, m.lower) == want);
    }
  }
  CHECK(verify_perfect(build_datum(parse_type("A2-1"))).minimal.size() == 3);
  CHECK(verify_perfect(build_datum(parse_type("D4-3"))).minimal.size() == 1);
  CHECK(verify_perfect(build_datum(parse_type("A4-2"))).minimal.size() == 1);
}

TEST_CASE("a removed 0-arrow is caught with a witness") {
  const auto b = build_crystal(build_datum(parse_type("A2-1")));
  const auto broken = drop_arrow(b, 0, b.empty());
  CHECK(broken.graph().arrows().size() + 1 == b.graph().arrows().size());
  const auto r = verify_perfect(broken);
  CHECK_FALSE(r.pass());
  bool witnessed = false;
  for (const auto& a : r.axioms)
    if (!a.pass) witnessed = witnessed || !a.witness.empty();
  CHECK(witnessed);
  CHECK_FALSE(r.axioms[3].pass);  // eps(x_theta) = 0 after the cut
  CHECK(r.axioms[3].witness == "x[1,1]");
}

TEST_CASE("a removed i-arrow breaks the weight cone") {
  const auto b = build_crystal(build_datum(parse_type("C2-1")));
  const auto r = verify_perfect(drop_arrow(b, 1, b.x_theta()));
  CHECK_FALSE(r.pass());
}
