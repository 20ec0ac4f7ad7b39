#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxlab/free_product.hpp"

using namespace boxlab;

namespace {

FreeProduct z2_z3() {
  return FreeProduct(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3));
}

}  // namespace

TEST_CASE("reduction merges and cancels") {
  const auto fp = z2_z3();
  // a * (b b^2) * a = a a = e
  const NormalFormWord w = fp.reduce({{Factor::A, 1},
                                      {Factor::B, 1},
                                      {Factor::B, 2},
                                      {Factor::A, 1}});
  CHECK(w.empty());
  // b b = b^2 stays one syllable
  const NormalFormWord b2 = fp.reduce({{Factor::B, 1}, {Factor::B, 1}});
  CHECK(b2.length() == 1);
  CHECK(b2.syllables[0].element == 2);
  CHECK_THROWS(fp.reduce({{Factor::B, 5}}));
}

TEST_CASE("multiplication cancels across the junction") {
  const auto fp = z2_z3();
  const auto ab = fp.multiply(fp.word_of(Factor::A, 1), fp.word_of(Factor::B, 1));
  CHECK(ab.length() == 2);
  const auto b2a = fp.multiply(fp.word_of(Factor::B, 2), fp.word_of(Factor::A, 1));
  CHECK(fp.multiply(ab, b2a).empty());  // (ab)(b^2 a) = e
  CHECK(fp.multiply(ab, fp.inverse(ab)).empty());
}

TEST_CASE("inverse reverses and inverts syllables") {
  const auto fp = z2_z3();
  const auto w = fp.multiply({fp.word_of(Factor::A, 1), fp.word_of(Factor::B, 1),
                              fp.word_of(Factor::A, 1)});
  const auto inv = fp.inverse(w);
  CHECK(inv.length() == 3);
  CHECK(inv.syllables[1].element == 2);  // b^-1 = b^2
  CHECK(fp.multiply(w, inv).empty());
}

TEST_CASE("commutators have syllable length 4") {
  const auto fp = z2_z3();
  for (int b = 1; b <= 2; ++b) {
    const auto c = fp.commutator(1, b);
    CHECK(c.length() == 4);
    const auto [pa, pb] = fp.project_to_direct_product(c);
    CHECK(pa == 0);
    CHECK(pb == 0);
  }
}

TEST_CASE("projection to the direct product") {
  const auto fp = z2_z3();
  const auto w = fp.multiply({fp.word_of(Factor::A, 1), fp.word_of(Factor::B, 1),
                              fp.word_of(Factor::A, 1), fp.word_of(Factor::B, 1)});
  const auto [pa, pb] = fp.project_to_direct_product(w);
  CHECK(pa == 0);  // a a = e
  CHECK(pb == 2);  // b b = b^2
}

TEST_CASE("injectivity checker finds a collision") {
  const auto fp = z2_z3();
  std::vector<NormalFormWord> words{fp.word_of(Factor::B, 1), fp.word_of(Factor::B, 2)};
  const auto collide = check_injective_on(words, [](const NormalFormWord&) { return 7u; });
  CHECK_FALSE(collide.injective);
  REQUIRE(collide.collision.has_value());
  const auto fine = check_injective_on(
      words, [](const NormalFormWord& w) { return NormalFormWordHash{}(w); });
  CHECK(fine.injective);
}
