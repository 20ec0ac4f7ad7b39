#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxlab/extension.hpp"
#include "boxlab/group.hpp"

using namespace boxlab;

namespace {

FreeProduct z2_star_z3() {
  return FreeProduct(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3));
}

}  // namespace

TEST_CASE("extension level 1 over Z/2 * Z/3") {
  const auto ex = extension_experiment(z2_star_z3(), 1);
  // rank-2 fiber: level 1 is the Cayley graph of (Z/2)^2, four vertices,
  // so |G/M_1| = 6 * 4
  CHECK(ex.fiber_order == 4);
  CHECK(ex.group_order == 24);
  CHECK(ex.order_consistent);
  CHECK(ex.relations_hold);
  CHECK(ex.lower_holds);
  CHECK(ex.upper_holds);
  CHECK(ex.two_length_controls);
  CHECK(ex.tau == 1);
  // identity has length zero, everything else is positive
  CHECK(ex.fiber_quotient_length[0] == 0);
  CHECK(ex.fiber_comb_length[0] == 0);
  for (std::size_t i = 1; i < ex.fiber_comb_length.size(); ++i) {
    CHECK(ex.fiber_comb_length[i] > 0);
    CHECK(ex.fiber_quotient_length[i] > 0);
  }
}

TEST_CASE("extension level 2 over Z/2 * Z/3") {
  const auto ex = extension_experiment(z2_star_z3(), 2);
  // level 2 is the homology cover of C4 x C4-ish base: 4 * 2^5 = 128 vertices
  CHECK(ex.fiber_order == 128);
  CHECK(ex.group_order == 768);
  CHECK(ex.order_consistent);
  CHECK(ex.relations_hold);
  CHECK(ex.lower_holds);
  CHECK(ex.upper_holds);
  CHECK(ex.two_length_controls);
}

TEST_CASE("extension respects the cap") {
  CHECK_THROWS_WITH_AS(extension_experiment(z2_star_z3(), 3, 100),
                       doctest::Contains("too large"), std::runtime_error);
}
