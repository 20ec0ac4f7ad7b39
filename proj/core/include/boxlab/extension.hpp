#pragma once

#include <cstdint>
#include <vector>

#include "boxlab/bass_serre.hpp"
#include "boxlab/free_product.hpp"
#include "boxlab/tower.hpp"

namespace boxlab {

/// The finite extension quotient G/M_k: elements ((a,b), v) with
/// (a,b) in A x B and v a vertex of level k of the square-quotient tower of
/// the commutator subgroup D (rank (|A|-1)(|B|-1)). Generator action is
/// computed through the 2-cocycle s(q1)s(q2)s(q1 q2)^-1 rewritten into the
/// commutator basis and walked on the tower level.
struct ExtensionExperiment {
  int k = 0;
  int tau = 0;
  std::size_t group_order = 0;          // |G/M_k|
  std::size_t fiber_order = 0;          // |D/N_k|
  bool order_consistent = false;        // |G/M_k| = |A x B| * |D/N_k|
  bool relations_hold = false;          // factor relations in the action
  bool lower_holds = false;             // l_Comb - 1 <= l_bar, all fiber elements
  bool upper_holds = false;             // l_bar <= 4 tau l_Comb
  std::vector<int> fiber_quotient_length;  // l_bar on the D/N_k fiber
  std::vector<int> fiber_comb_length;      // l_Comb (tower BFS)
  bool two_length_controls = false;     // quotient lengths from a second
                                        // generating set are mutually
                                        // controlled by monotone functions
};

ExtensionExperiment extension_experiment(const FreeProduct& fp, int k,
                                         std::size_t cap = 1000000);

}  // namespace boxlab
