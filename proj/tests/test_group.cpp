#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "boxlab/group.hpp"
#include "boxlab/rational.hpp"

using namespace boxlab;

TEST_CASE("rational arithmetic stays reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, -2).num == -1);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 1) == Rational(7));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("cyclic group tables") {
  const auto z4 = FiniteGroupTable::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.identity() == 0);
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.mul(2, 3) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.inv(2) == 2);
  z4.validate();
}

TEST_CASE("direct products") {
  const auto v4 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                   FiniteGroupTable::cyclic(2));
  CHECK(v4.order() == 4);
  for (int x = 0; x < 4; ++x) CHECK(v4.mul(x, x) == v4.identity());
  v4.validate();

  const auto z6 = FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                   FiniteGroupTable::cyclic(3));
  CHECK(z6.order() == 6);
  z6.validate();
}

TEST_CASE("table io round trip") {
  const auto z5 = FiniteGroupTable::cyclic(5);
  std::stringstream s;
  z5.write(s);
  const auto back = FiniteGroupTable::from_stream(s);
  CHECK(back.order() == 5);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y) CHECK(back.mul(x, y) == z5.mul(x, y));
}

TEST_CASE("validate rejects a corrupted table") {
  // swap two entries of Z/4 so associativity breaks
  std::vector<int> mul;
  const auto z4 = FiniteGroupTable::cyclic(4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) mul.push_back(z4.mul(x, y));
  std::swap(mul[4 * 1 + 1], mul[4 * 1 + 2]);
  CHECK_THROWS_AS(FiniteGroupTable(4, mul).validate(), std::runtime_error);
}

TEST_CASE("generating sets symmetrize") {
  const auto z2 = FiniteGroupTable::cyclic(2);
  const auto z3 = FiniteGroupTable::cyclic(3);
  const GeneratingSet s({{Factor::B, 1}}, true, z2, z3);
  CHECK(s.size() == 2);  // b and b^2 added
  const GeneratingSet full = GeneratingSet::full(z2, z3);
  CHECK(full.size() == 3);
}

TEST_CASE("cayley word lengths") {
  const auto z6 = FiniteGroupTable::cyclic(6);
  const std::vector<int> gens{1, 5};
  CHECK(cayley_word_length(z6, gens, 0) == 0);
  CHECK(cayley_word_length(z6, gens, 1) == 1);
  CHECK(cayley_word_length(z6, gens, 3) == 3);
  CHECK(cayley_word_length(z6, gens, 4) == 2);
  // {2,4} generates only the even residues
  CHECK_THROWS_WITH_AS(cayley_word_lengths(z6, {2, 4}),
                       doctest::Contains("not generating"), std::runtime_error);
}
