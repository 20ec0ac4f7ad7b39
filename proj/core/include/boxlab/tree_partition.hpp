#pragma once

#include <cstdint>
#include <vector>

#include "boxlab/graph.hpp"
#include "boxlab/metric.hpp"

namespace boxlab {

/// Doubled Gromov product 2*(x|y) at the base vertex (kept integral: the
/// product itself can be a half-integer). On a tree this is twice the depth
/// of the meet of x and y.
int gromov_product_doubled(const LabeledMultigraph& tree, int base, int x, int y);

/// Annulus/cluster decomposition of a tree at scale L: annulus k holds depths
/// in [kL, (k+1)L] with boundary depths assigned to the lower annulus;
/// clusters are the classes of 2*(x|y) >= L*(2k-1) inside each annulus.
struct ClusterDecomposition {
  int L = 0;
  int base = 0;
  std::vector<int> annulus;     // per vertex
  std::vector<int> cluster;     // per vertex, global cluster id
  std::vector<std::vector<int>> clusters;
  std::vector<int> cluster_annulus;            // per cluster
  std::vector<std::vector<int>> neighborhoods; // W_i = C_i(L/2)
};

ClusterDecomposition cluster_decomposition(const LabeledMultigraph& tree, int L,
                                           int base = 0);

/// Distance-to-complement partition of unity subordinated to the W_i.
struct PartitionOfUnity {
  std::vector<std::vector<int>> support;            // W_i per cluster
  std::vector<std::vector<double>> weights;         // [vertex][cluster]
  double max_edge_l1 = 0.0;   // max over edges of ||phi(x)-phi(y)||_1
  double max_l1_ratio = 0.0;  // max over sampled pairs of l1 diff / distance
};

PartitionOfUnity partition_of_unity(const LabeledMultigraph& tree, int L, int base = 0);

struct TreeCertificate {
  int L = 0;
  int C = 0;  // uniform support diameter bound 4L
  double max_l1_r_pairs = 0.0;
  bool verified = false;
  std::size_t verified_pairs = 0;
};

struct EquiExactCertificate {
  int L = 0;
  int C = 0;
  double R = 0.0, eps = 0.0;
  std::vector<TreeCertificate> per_tree;
  bool verified = false;
};

/// Chooses L = ceil(40R/eps) and exhaustively verifies the l1 bound over all
/// pairs with d <= R in every tree, with the uniform support bound C = 4L.
EquiExactCertificate equi_exact_certificate(const std::vector<LabeledMultigraph>& trees,
                                            double R, double eps);

/// Two-family partition of unity for a core set and L-separated pieces; the
/// weights use the same distance-to-complement formula on the L/2
/// enlargements. Throws (naming the pair) if separation fails.
struct SeparatedCoverPartition {
  std::vector<std::vector<int>> supports;   // [0] = core(L/2), then pieces
  std::vector<std::vector<double>> weights; // [vertex][family]
  double max_edge_l1 = 0.0;
};

SeparatedCoverPartition separated_cover_partition(const MetricComponent& space,
                                                  const std::vector<int>& core,
                                                  const std::vector<std::vector<int>>& pieces,
                                                  int L);

/// Deterministic random tree with bounded degree, for test corpora.
LabeledMultigraph random_tree(int vertices, int max_degree, unsigned seed);

}  // namespace boxlab
