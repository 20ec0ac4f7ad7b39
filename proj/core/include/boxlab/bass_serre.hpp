#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxlab/free_product.hpp"
#include "boxlab/graph.hpp"

namespace boxlab {

/// A vertex of the Bass-Serre tree: coset g*A or g*B with the canonical
/// representative (trailing syllable of the coset's own side stripped).
struct TreeVertex {
  NormalFormWord rep;
  Factor side;

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
};

struct TreeVertexHash {
  std::size_t operator()(const TreeVertex& v) const {
    return NormalFormWordHash{}(v.rep) * 2 + static_cast<std::size_t>(v.side);
  }
};

/// Finite ball of the Bass-Serre tree around the coset A.
struct TreeBall {
  int radius = 0;
  std::vector<TreeVertex> vertices;  // index 0 = root coset A
  std::unordered_map<TreeVertex, int, TreeVertexHash> index;
  LabeledMultigraph graph;
  std::vector<NormalFormWord> edge_words;  // edge representative in G
};

TreeBall tree_ball(const FreeProduct& fp, int radius, std::size_t cap = 1000000);

TreeVertex canonical_coset(const FreeProduct& fp, const NormalFormWord& g, Factor side);

/// Tree distance between the cosets g*side1 and h*side2 via the prefix walk
/// of the canonical representatives.
int tree_distance(const FreeProduct& fp, const NormalFormWord& g, Factor side1,
                  const NormalFormWord& h, Factor side2);

/// [a,b] with its reduced word; the word always has syllable length 4.
struct BasisElement {
  int a;  // non-identity element of A
  int b;  // non-identity element of B
  NormalFormWord word;
};

/// All [a,b] with a,b != e, optionally bounded by factor word length <= tau
/// with respect to the given factor generating sets.
std::vector<BasisElement> commutator_basis(const FreeProduct& fp,
                                           std::optional<int> tau = std::nullopt,
                                           const std::vector<int>& gens_a = {},
                                           const std::vector<int>& gens_b = {});

/// Membership in D = ker(G -> A x B).
bool kernel_membership(const FreeProduct& fp, const NormalFormWord& w);

/// Word over the commutator basis: +-(i+1) means basis[i]^{+-1}.
using BasisWord = std::vector<int>;

NormalFormWord evaluate_basis_word(const FreeProduct& fp,
                                   const std::vector<BasisElement>& basis,
                                   const BasisWord& bw);

/// Rewrites a kernel word as a basis word by walking the tree geodesic from
/// A to w*A through commutator translates of the fundamental subtree. The
/// output length is at most d_T(w*A, A). Throws on non-kernel input.
BasisWord express_in_basis(const FreeProduct& fp,
                           const std::vector<BasisElement>& basis,
                           const NormalFormWord& w);

/// Basis word lengths of the ball of radius L in D, by BFS over normal forms.
struct BasisBall {
  std::vector<NormalFormWord> words;
  std::vector<int> length;  // l_B per word
  std::unordered_map<NormalFormWord, int, NormalFormWordHash> index;
};

BasisBall basis_ball(const FreeProduct& fp, const std::vector<BasisElement>& basis,
                     int radius, std::size_t cap = 1000000);

struct QiReport {
  int radius = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
  // empirical extremes of d_T/l_B and (l_B - d_T) over the ball
  double max_ratio_dt_over_len = 0.0;
  int max_len_minus_dt = 0;
  bool basis_distance_four = true;  // every basis element has d_T = 4
};

/// Checks d_T(gA,A)/4 <= l_B(g) <= d_T(gA,A)+1 over the basis ball of radius L.
QiReport qi_report(const FreeProduct& fp, int L, std::size_t cap = 1000000);

}  // namespace boxlab
