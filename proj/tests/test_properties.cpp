#include "doctest.h"

#include "support/properties.hpp"

namespace {

const props::Fleet& fleet() {
  static const props::Fleet f(5);
  return f;
}

void require_clean(const props::Outcome& o) {
  CHECK(o.cases >= 10000);
  CHECK_MESSAGE(o.ok(), o.failures << " failures, first: " << o.first_failure);
}

}  // namespace

TEST_CASE("e and f are inverse pairs") { require_clean(props::inverse_pairs(fleet(), 11, 6000)); }
TEST_CASE("phi - eps pairs with the weight") { require_clean(props::weight_pairing(fleet(), 12, 6000)); }
TEST_CASE("each arrow lowers the weight by alpha_i") { require_clean(props::weight_drop(fleet(), 13, 12000)); }
TEST_CASE("energy is constant on classical components") { require_clean(props::energy_constancy(fleet(), 14, 10000)); }

TEST_CASE("path generation order does not matter") {
  const auto o = props::order_independence(fleet(), 3);
  CHECK_MESSAGE(o.ok(), o.first_failure);
  CHECK(o.cases > 1000);
}
