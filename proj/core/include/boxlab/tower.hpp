#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boxlab/graph.hpp"
#include "boxlab/group.hpp"

namespace boxlab {

/// Packed bit vector used for wall-crossing signatures.
struct BitVec {
  int bits = 0;
  std::vector<std::uint64_t> words;

  explicit BitVec(int n = 0) : bits(n), words((n + 63) / 64, 0) {}
  bool get(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void toggle(int i) { words[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  friend bool operator==(const BitVec&, const BitVec&) = default;
};

int hamming(const BitVec& x, const BitVec& y);

/// Cayley multigraph for a symmetric generating list of group elements: one
/// edge per (vertex, representative of {s, s^-1}); an involution is its own
/// representative, so each involution pair {v, vs} carries two parallel
/// edges. Labels are representative indices.
LabeledMultigraph cayley_multigraph(const FiniteGroupTable& group,
                                    const std::vector<int>& symmetric_gens);

/// One stage of the square-quotient tower: the Cayley multigraph of a finite
/// quotient of a rank-r free group, with deterministic walk tables for the
/// free generators and (above level 1) the wall data of the covering map.
struct TowerLevel {
  LabeledMultigraph graph;
  int rank = 0;  // free generators; each contributes |V| directed edges

  /// walk tables, size V*rank: edge used when multiplying by g_j (out) or
  /// g_j^-1 (in) at a vertex.
  std::vector<int> out_edge;
  std::vector<int> in_edge;

  int base_edge_count = 0;            // 0 at level 1
  std::vector<int> projection;        // own edge -> base edge
  std::vector<BitVec> signatures;     // vertex -> crossing parities from vertex 0
  std::optional<int> girth;           // simple-graph girth; nullopt = forest

  bool has_walls() const { return base_edge_count > 0; }

  int vertex_count() const { return graph.vertex_count; }
  int apply_generator(int vertex, int generator, bool inverse) const;
  int apply_word(int vertex, const std::vector<int>& signed_word) const;
};

/// Signed generator convention for walk words: +-(j+1) means g_j^{+-1}.
std::vector<int> invert_signed_word(const std::vector<int>& w);

/// Level 1 of the rank-r tower: Cayley multigraph of (Z/2)^r, vertex = bit
/// mask, generator j toggles bit j.
TowerLevel tower_base_level(int rank);

/// Wrap a bare connected multigraph (no walk tables) for homology_cover.
TowerLevel tower_level_from_graph(LabeledMultigraph graph);

/// Maximal elementary-abelian-2 cover of a connected base: vertices
/// V x F_2^d with d = E-V+1, non-tree edge j toggling coordinate j. Carries
/// projection, wall signatures, and lifted walk tables.
TowerLevel homology_cover(const TowerLevel& base,
                          std::size_t vertex_cap = 1000000);

struct Tower {
  std::vector<TowerLevel> levels;
  bool truncated = false;  // size cap hit before requested depth
};

Tower build_tower(int rank, int depth, std::size_t vertex_cap = 1000000);

/// Hamming distance between wall signatures. Throws on a level without walls.
int wall_metric(const TowerLevel& level, int x, int y);

/// Signature coordinates as 0/1 real vectors; ||F(x)-F(y)||^2 = d_W(x,y).
std::vector<std::vector<double>> wall_embedding(const TowerLevel& level);

/// Edge fiber over one base edge; removing it must cut the graph in two.
std::vector<int> wall_members(const TowerLevel& level, int base_edge);

}  // namespace boxlab
