#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxlab/baumslag.hpp"
#include "boxlab/graph.hpp"
#include "boxlab/group.hpp"
#include "boxlab/rational.hpp"

namespace boxlab {

/// Multigraph edge boundary |dA|: edges with exactly one endpoint in the
/// subset, counted with multiplicity; loops never cross.
std::int64_t edge_boundary(const LabeledMultigraph& graph, const std::vector<bool>& in_set);

struct CheegerResult {
  Rational value;                  // exact mode
  std::vector<int> witness_set;    // subset achieving the minimum
  double lower = 0.0, upper = 0.0; // spectral mode interval
  bool exact = false;
};

inline constexpr int kCheegerExactMaxVertices = 24;

/// Exact Cheeger constant by exhaustive subset enumeration (|V| <= 24).
CheegerResult cheeger_exact(const LabeledMultigraph& graph);

/// Spectral interval [d*lambda/2, d*sqrt(2*lambda)] from the normalized
/// Laplacian of a connected d-regular multigraph. Throws on non-regular input.
CheegerResult cheeger_spectral(const LabeledMultigraph& graph);

struct MonotonicityReport {
  Rational h_group;
  Rational h_quotient;
  bool holds = false;  // h(G,S) <= h(G/H, S-bar)
};

/// Exact check of subgroup quotient monotonicity: Cheeger constant of
/// Cay(G,S) vs the Schreier graph on left cosets G/H. H is verified to be a
/// subgroup (closure), |G| <= 24.
MonotonicityReport quotient_monotonicity_check(const FiniteGroupTable& group,
                                               const std::vector<int>& subgroup,
                                               const std::vector<int>& symmetric_gens);

/// Cayley graph of a finite group with the Schreier edge convention
/// (one edge per class of (v,s) ~ (sv, s^-1)); used on both sides of the
/// monotonicity check so edge fibers match.
LabeledMultigraph cayley_schreier_graph(const FiniteGroupTable& group,
                                        const std::vector<int>& symmetric_gens);

struct FolnerWitness {
  Factor side;
  std::vector<int> members;        // word indices in U(k)
  std::int64_t boundary = 0;       // |dP|
  Rational ratio;                  // |dP| / |P|
  bool is_half_or_less = false;    // |P| <= |U(k)|/2
  std::int64_t generator_count = 0;  // |S| with multiplicity
};

/// The non-expansion witness P = {e} + words whose rightmost syllable lies in
/// `side`, in the Schreier graph of sigma(k) for S = S_A u S_B.
FolnerWitness folner_witness(const FreeProduct& fp, int k, Factor side,
                             const GeneratingSet& s,
                             std::size_t cap = kDefaultWordCap);

}  // namespace boxlab
