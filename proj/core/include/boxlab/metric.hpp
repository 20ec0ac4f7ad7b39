#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boxlab/graph.hpp"

namespace boxlab {

/// A finite metric space as a dense integer distance table.
struct MetricComponent {
  int point_count = 0;
  std::vector<std::int64_t> dist;  // row-major point_count^2
  int basepoint = 0;
  std::string label;

  std::int64_t d(int x, int y) const {
    return dist[static_cast<std::size_t>(x) * point_count + y];
  }
  std::int64_t diameter() const;

  /// Symmetry, zero diagonal, triangle inequality (exhaustive below 200
  /// points, sampled triples up to 2000). Throws on violation.
  void validate(unsigned rng_seed = 1) const;

  static MetricComponent from_graph(const LabeledMultigraph& graph,
                                    int basepoint = 0, std::string label = {});
};

/// Coarse disjoint union with the concrete basepoint-offset metric:
/// cross-component d(x,y) = d_n(x,b_n) + K_n + K_m + d_m(y,b_m),
/// K_n = 2^n + max_{j<=n} diam (components are 1-based in the offsets).
struct CoarseUnion {
  std::vector<MetricComponent> components;
  std::vector<std::int64_t> offsets;  // K_n per component

  struct Point {
    int component;
    int point;
  };

  std::int64_t d(Point x, Point y) const;
  std::size_t total_points() const;
};

CoarseUnion coarse_union(std::vector<MetricComponent> components);

/// Numeric check of both axioms of the coarse-union definition.
struct CoarseUnionAxiomReport {
  bool axiom1 = false;  // |2^n - 2^m| <= d(x,y) for all cross pairs
  bool axiom2 = false;  // U_{n,m} within distance R is bounded
  std::int64_t max_cross_set_diameter = 0;
};

CoarseUnionAxiomReport verify_coarse_union_axioms(const CoarseUnion& u,
                                                  const std::vector<std::int64_t>& radii);

/// Per-component map point -> real coordinate vector.
struct EmbeddingTable {
  std::vector<std::vector<std::vector<double>>> vectors;  // [component][point][coord]

  static EmbeddingTable single(std::vector<std::vector<double>> component_vectors);
};

double l2_distance(const std::vector<double>& x, const std::vector<double>& y);
double inner_product(const std::vector<double>& x, const std::vector<double>& y);

/// Compression / dilatation profile over realized distances:
/// rho_-(t) = min ||F(x)-F(y)|| over pairs with d >= t,
/// rho_+(t) = max over pairs with d <= t.
struct CompressionProfile {
  std::vector<double> t;
  std::vector<double> rho_minus;
  std::vector<double> rho_plus;
};

CompressionProfile profile(const EmbeddingTable& embedding, const CoarseUnion& space);
CompressionProfile profile(const EmbeddingTable& embedding, const MetricComponent& space);

/// Gaussian-kernel unit-vector family of an embedding at parameter t: Gram
/// matrix G_xy = exp(-t ||F(x)-F(y)||^2) per component, PSD-checked, with
/// unit vectors materialized from an eigendecomposition of G.
struct GaussianFamily {
  double t = 0.0;
  std::vector<std::vector<double>> gram;        // per component, row-major
  std::vector<double> min_eigenvalue;           // per component
  EmbeddingTable unit_vectors;
  bool psd = false;  // min eigenvalue >= -1e-9 everywhere
};

GaussianFamily gaussian_family(const EmbeddingTable& embedding, double t);

/// One input family of the direct-sum assembly, for parameters
/// eps_l = 1/l, R_l = sqrt(l); M_l is found empirically as the least radius
/// with ||phi(x)-phi(y)|| >= 1 whenever d(x,y) >= M_l.
struct UnitVectorFamily {
  int l = 0;
  EmbeddingTable vectors;
};

struct DirectSumResult {
  EmbeddingTable embedding;
  std::vector<double> m_thresholds;  // empirical M_l per family
  bool upper_bound_holds = false;    // ||F(x)-F(y)|| <= d(x,y)+1 all pairs
  bool staircase_holds = false;      // rho_- >= 1/2 sqrt(k-1) on [M_{k-1},M_k)
  double max_upper_slack = 0.0;
};

/// Builds F(x) = 1/2 (+)_l (phi_l(x) - phi_l(x0)) and verifies both bounds.
/// Throws if a family violates its (R_l, eps_l) contract, naming l.
DirectSumResult assemble_direct_sum(const std::vector<UnitVectorFamily>& families,
                                    const MetricComponent& space);

/// Induced embedding over a finite group from a unit-vector table on a
/// subgroup: phihat(x) = phi(section(xbar)^-1 x) (x) e_xbar.
struct InducedEmbeddingResult {
  std::vector<std::vector<double>> vectors;  // per group element
  bool same_coset_isometric = false;
  bool cross_coset_sq_two = false;   // squared distance exactly 2 (norm sqrt(2))
  bool cross_coset_orthogonal = false;
};

class FiniteGroupTable;

InducedEmbeddingResult induced_embedding(const FiniteGroupTable& group,
                                         const std::vector<int>& subgroup,
                                         const std::vector<std::vector<double>>& phi,
                                         const std::vector<int>& word_length);

/// Square-root gluing of local unit-vector tables along a partition of
/// unity: glued(x) = (w_i(x)^(1/2) xi_i(x))_i.
struct GlueResult {
  std::vector<std::vector<double>> vectors;
  double max_norm_error = 0.0;          // | ||glued(x)|| - 1 |
  bool bound_holds = false;             // <= eps + sqrt(eps) on R-pairs
  double max_r_pair_distance = 0.0;
};

GlueResult glue_embeddings(const std::vector<std::vector<double>>& weights,
                           const std::vector<std::vector<std::vector<double>>>& locals,
                           const MetricComponent& space, double R, double eps);

}  // namespace boxlab
