#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxlab/bass_serre.hpp"

using namespace boxlab;

namespace {

FreeProduct z2_z3() {
  return FreeProduct(FiniteGroupTable::cyclic(2), FiniteGroupTable::cyclic(3));
}

}  // namespace

TEST_CASE("canonical coset representatives strip their own side") {
  const auto fp = z2_z3();
  const auto ab = fp.multiply(fp.word_of(Factor::A, 1), fp.word_of(Factor::B, 1));
  CHECK(canonical_coset(fp, ab, Factor::B).rep.length() == 1);  // abB = aB
  CHECK(canonical_coset(fp, ab, Factor::A).rep.length() == 2);  // abA stays
  CHECK(canonical_coset(fp, fp.word_of(Factor::A, 1), Factor::A).rep.empty());
}

TEST_CASE("tree distances by hand") {
  const auto fp = z2_z3();
  const NormalFormWord e;
  const auto a = fp.word_of(Factor::A, 1);
  const auto ab = fp.multiply(a, fp.word_of(Factor::B, 1));
  CHECK(tree_distance(fp, e, Factor::A, e, Factor::A) == 0);
  CHECK(tree_distance(fp, e, Factor::A, e, Factor::B) == 1);
  CHECK(tree_distance(fp, a, Factor::B, e, Factor::A) == 1);
  CHECK(tree_distance(fp, ab, Factor::A, e, Factor::A) == 2);
  CHECK(tree_distance(fp, ab, Factor::A, a, Factor::B) == 1);
  // distinct children of the root are 2 apart
  CHECK(tree_distance(fp, e, Factor::B, a, Factor::B) == 2);
}

TEST_CASE("tree ball growth and degrees") {
  const auto fp = z2_z3();
  const auto b1 = tree_ball(fp, 1);
  CHECK(b1.vertices.size() == 3);  // A, B, aB
  const auto b2 = tree_ball(fp, 2);
  CHECK(b2.vertices.size() == 7);  // + 2 children for each B-coset
  CHECK(b2.graph.edges.size() == 6);
  CHECK(b2.graph.degree(0) == 2);  // root has |A| children
  for (const auto& [v, i] : b2.index)
    if (v.side == Factor::B && b2.graph.degree(i) > 1) CHECK(b2.graph.degree(i) == 3);
  CHECK_THROWS_WITH_AS(tree_ball(fp, 20, 100), doctest::Contains("too large"),
                       std::runtime_error);
}

TEST_CASE("commutator basis and membership") {
  const auto fp = z2_z3();
  const auto basis = commutator_basis(fp);
  CHECK(basis.size() == 2);  // (|A|-1)(|B|-1)
  for (const auto& s : basis) {
    CHECK(s.word.length() == 4);
    CHECK(kernel_membership(fp, s.word));
    CHECK(tree_distance(fp, s.word, Factor::A, NormalFormWord{}, Factor::A) == 4);
  }
  CHECK_FALSE(kernel_membership(fp, fp.word_of(Factor::A, 1)));
  // factor-length truncation drops elements beyond tau
  const auto t1 = commutator_basis(fp, 1, {1}, {1, 2});
  CHECK(t1.size() == 2);
  const auto t_only_b = commutator_basis(fp, 1, {1}, {1});
  CHECK(t_only_b.size() == 1);  // b^2 has length 2 over {b}... with inverse closure
}

TEST_CASE("express_in_basis round trips") {
  const auto fp = z2_z3();
  const auto basis = commutator_basis(fp);
  // all products of up to three basis letters
  for (int i = -2; i <= 2; ++i) {
    for (int j = -2; j <= 2; ++j) {
      for (int l = -2; l <= 2; ++l) {
        BasisWord bw;
        for (int s : {i, j, l})
          if (s != 0) bw.push_back(s);
        const auto w = evaluate_basis_word(fp, basis, bw);
        REQUIRE(kernel_membership(fp, w));
        const auto back = express_in_basis(fp, basis, w);
        CHECK(evaluate_basis_word(fp, basis, back) == w);
        CHECK(back.size() <= w.length() + 1);
      }
    }
  }
  CHECK_THROWS_AS(express_in_basis(fp, basis, fp.word_of(Factor::B, 1)),
                  std::invalid_argument);
}

TEST_CASE("basis ball lengths are geodesic") {
  const auto fp = z2_z3();
  const auto basis = commutator_basis(fp);
  const auto ball = basis_ball(fp, basis, 2);
  CHECK(ball.words.size() == 1 + 4 + 12);  // free of rank 2: 1, 4, 4*3
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    if (ball.length[i] == 1) CHECK(ball.words[i].length() == 4);
  }
}

TEST_CASE("quasi-isometry report is clean at radius 4") {
  const auto fp = z2_z3();
  const auto report = qi_report(fp, 4);
  CHECK(report.checked == 1 + 4 + 12 + 36 + 108);
  CHECK(report.violations == 0);
  CHECK(report.basis_distance_four);
  CHECK(report.max_ratio_dt_over_len <= 4.0);
  CHECK(report.max_len_minus_dt <= 1);
}
