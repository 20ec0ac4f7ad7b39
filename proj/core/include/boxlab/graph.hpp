#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace boxlab {

/// Undirected multigraph with labeled edges; parallel edges and loops are
/// allowed and kept as distinct edge records.
struct LabeledMultigraph {
  struct Edge {
    int u;
    int v;
    int label;
  };

  int vertex_count = 0;
  std::vector<Edge> edges;

  int add_edge(int u, int v, int label);

  /// incident edge indices per vertex (loops listed once).
  std::vector<std::vector<int>> adjacency() const;

  int degree(int v) const;  // loops count 1

  bool connected() const;
  std::vector<int> bfs_distances(int source) const;
  std::vector<int> bfs_distances(const std::vector<int>& sources) const;

  /// Girth of the simple underlying graph: parallel edges collapse, loops are
  /// ignored. nullopt = forest (unbounded).
  std::optional<int> girth_simple() const;

  /// Number of connected components after deleting the listed edges.
  int components_without(const std::vector<int>& removed_edges) const;

  /// Shared text format: `graph <V> <E>` then `u v label` per edge.
  void write(std::ostream& out) const;
  static LabeledMultigraph read(std::istream& in);
};

/// Simple cycle C_n (n >= 3) and path P_n, for test fixtures and oracles.
LabeledMultigraph cycle_graph(int n);
LabeledMultigraph path_graph(int n);
LabeledMultigraph complete_graph(int n);

/// Schreier multigraph of a vertex action: one edge per class of (z, s) with
/// (z, s) identified with (s.z, s_inv). Fixed points give loops (one edge).
/// `action[s][z]` is s.z and `inverse_of[s]` names the generator s^{-1}.
LabeledMultigraph schreier_multigraph(int degree,
                                      const std::vector<std::vector<int>>& action,
                                      const std::vector<int>& inverse_of);

constexpr int kUnreached = std::numeric_limits<int>::max();

}  // namespace boxlab
