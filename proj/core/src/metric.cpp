#include "boxlab/metric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "boxlab/group.hpp"

namespace boxlab {

std::int64_t MetricComponent::diameter() const {
  std::int64_t best = 0;
  for (std::int64_t v : dist) best = std::max(best, v);
  return best;
}

void MetricComponent::validate(unsigned rng_seed) const {
  const int n = point_count;
  if (n <= 0 || static_cast<std::size_t>(n) * n != dist.size())
    throw std::invalid_argument("metric: bad table size");
  if (basepoint < 0 || basepoint >= n) throw std::invalid_argument("metric: bad basepoint");
  for (int x = 0; x < n; ++x) {
    if (d(x, x) != 0) throw std::invalid_argument("metric: nonzero diagonal");
    for (int y = x + 1; y < n; ++y) {
      if (d(x, y) != d(y, x)) throw std::invalid_argument("metric: asymmetric");
      if (d(x, y) <= 0) throw std::invalid_argument("metric: nonpositive off-diagonal");
    }
  }
  auto check = [&](int x, int y, int z) {
    if (d(x, z) > d(x, y) + d(y, z))
      throw std::invalid_argument("metric: triangle inequality violated");
  };
  if (n < 200) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) check(x, y, z);
  } else {
    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
  }
}

MetricComponent MetricComponent::from_graph(const LabeledMultigraph& graph,
                                            int basepoint, std::string label) {
  MetricComponent m;
  m.point_count = graph.vertex_count;
  m.basepoint = basepoint;
  m.label = std::move(label);
  m.dist.resize(static_cast<std::size_t>(m.point_count) * m.point_count);
  for (int v = 0; v < m.point_count; ++v) {
    auto row = graph.bfs_distances(v);
    for (int w = 0; w < m.point_count; ++w) {
      if (row[w] == kUnreached)
        throw std::invalid_argument("metric from graph: disconnected");
      m.dist[static_cast<std::size_t>(v) * m.point_count + w] = row[w];
    }
  }
  return m;
}

std::int64_t CoarseUnion::d(Point x, Point y) const {
  if (x.component == y.component)
    return components[x.component].d(x.point, y.point);
  const MetricComponent& cx = components[x.component];
  const MetricComponent& cy = components[y.component];
  return cx.d(x.point, cx.basepoint) + offsets[x.component] + offsets[y.component] +
         cy.d(y.point, cy.basepoint);
}

std::size_t CoarseUnion::total_points() const {
  std::size_t n = 0;
  for (const auto& c : components) n += static_cast<std::size_t>(c.point_count);
  return n;
}

CoarseUnion coarse_union(std::vector<MetricComponent> components) {
  if (components.empty()) throw std::invalid_argument("coarse union of nothing");
  CoarseUnion u;
  std::int64_t max_diam = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    max_diam = std::max(max_diam, components[i].diameter());
    if (i + 1 >= 63) throw std::invalid_argument("too large: coarse union offset overflow");
    u.offsets.push_back((std::int64_t{1} << (i + 1)) + max_diam);
  }
  u.components = std::move(components);
  return u;
}

CoarseUnionAxiomReport verify_coarse_union_axioms(const CoarseUnion& u,
                                                  const std::vector<std::int64_t>& radii) {
  CoarseUnionAxiomReport report;
  report.axiom1 = true;
  report.axiom2 = true;
  const int nc = static_cast<int>(u.components.size());
  for (int n = 0; n < nc; ++n) {
    for (int m = 0; m < nc; ++m) {
      if (n == m) continue;
      const std::int64_t gap =
          std::llabs((std::int64_t{1} << (n + 1)) - (std::int64_t{1} << (m + 1)));
      for (int x = 0; x < u.components[n].point_count; ++x) {
        std::int64_t nearest = -1;
        for (int y = 0; y < u.components[m].point_count; ++y) {
          const std::int64_t dxy = u.d({n, x}, {m, y});
          if (dxy < gap) report.axiom1 = false;
          if (nearest < 0 || dxy < nearest) nearest = dxy;
        }
        for (std::int64_t r : radii) {
          if (nearest > r) continue;
          // x lies in U_{n,m} at radius r; the set sits inside X_n, so its
          // diameter is bounded by the component diameter
          report.max_cross_set_diameter =
              std::max(report.max_cross_set_diameter, u.components[n].diameter());
        }
      }
    }
  }
  return report;
}

EmbeddingTable EmbeddingTable::single(std::vector<std::vector<double>> component_vectors) {
  EmbeddingTable t;
  t.vectors.push_back(std::move(component_vectors));
  return t;
}

double l2_distance(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::max(x.size(), y.size());
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = (i < x.size() ? x[i] : 0.0) - (i < y.size() ? y[i] : 0.0);
    s += dx * dx;
  }
  return std::sqrt(s);
}

double inner_product(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) s += x[i] * y[i];
  return s;
}

namespace {

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

CompressionProfile profile_from_pairs(std::vector<std::pair<std::int64_t, double>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::map<std::int64_t, std::pair<double, double>> by_t;  // t -> (min at >= t, max at <= t)
  CompressionProfile p;
  if (pairs.empty()) return p;
  // rho_+(t): running max over d <= t; rho_-(t): suffix min over d >= t
  std::vector<double> suffix_min(pairs.size());
  double run = pairs.back().second;
  for (std::size_t i = pairs.size(); i-- > 0;) {
    run = std::min(run, pairs[i].second);
    suffix_min[i] = run;
  }
  double prefix_max = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    prefix_max = std::max(prefix_max, pairs[i].second);
    if (i + 1 == pairs.size() || pairs[i + 1].first != pairs[i].first) {
      p.t.push_back(static_cast<double>(pairs[i].first));
      p.rho_plus.push_back(prefix_max);
      // first index with this t value
      std::size_t j = i;
      while (j > 0 && pairs[j - 1].first == pairs[i].first) --j;
      p.rho_minus.push_back(suffix_min[j]);
    }
  }
  return p;
}

}  // namespace

CompressionProfile profile(const EmbeddingTable& embedding, const MetricComponent& space) {
  const auto& vecs = embedding.vectors.at(0);
  std::vector<std::pair<std::int64_t, double>> pairs;
  for (int x = 0; x < space.point_count; ++x)
    for (int y = x; y < space.point_count; ++y)
      pairs.emplace_back(space.d(x, y), l2_distance(vecs[x], vecs[y]));
  return profile_from_pairs(std::move(pairs));
}

CompressionProfile profile(const EmbeddingTable& embedding, const CoarseUnion& space) {
  // components occupy orthogonal blocks of the direct-sum target, so a cross
  // pair realizes sqrt(|F(x)|^2 + |F(y)|^2)
  std::vector<std::pair<std::int64_t, double>> pairs;
  const int nc = static_cast<int>(space.components.size());
  for (int n = 0; n < nc; ++n) {
    const auto& vn = embedding.vectors.at(n);
    for (int x = 0; x < space.components[n].point_count; ++x) {
      for (int m = n; m < nc; ++m) {
        const auto& vm = embedding.vectors.at(m);
        for (int y = (m == n ? x : 0); y < space.components[m].point_count; ++y) {
          const double e = m == n ? l2_distance(vn[x], vm[y])
                                  : std::sqrt(norm2(vn[x]) + norm2(vm[y]));
          pairs.emplace_back(space.d({n, x}, {m, y}), e);
        }
      }
    }
  }
  return profile_from_pairs(std::move(pairs));
}

GaussianFamily gaussian_family(const EmbeddingTable& embedding, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("gaussian family: t must be positive");
  GaussianFamily fam;
  fam.t = t;
  fam.psd = true;
  for (const auto& vecs : embedding.vectors) {
    const int n = static_cast<int>(vecs.size());
    Eigen::MatrixXd g(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const double dxy = l2_distance(vecs[x], vecs[y]);
        g(x, y) = std::exp(-t * dxy * dxy);
      }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("gaussian family: eigensolver failed");
    const double min_eig = solver.eigenvalues()(0);
    fam.min_eigenvalue.push_back(min_eig);
    if (min_eig < -1e-9) fam.psd = false;
    // unit vectors phi(x) with <phi(x),phi(y)> = G_xy, from G = (V sqrt(D))^T
    std::vector<std::vector<double>> unit(n, std::vector<double>(n, 0.0));
    for (int x = 0; x < n; ++x)
      for (int j = 0; j < n; ++j) {
        const double ev = std::max(0.0, solver.eigenvalues()(j));
        unit[x][j] = solver.eigenvectors()(x, j) * std::sqrt(ev);
      }
    fam.unit_vectors.vectors.push_back(std::move(unit));
    std::vector<double> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) flat[static_cast<std::size_t>(x) * n + y] = g(x, y);
    fam.gram.push_back(std::move(flat));
  }
  return fam;
}

DirectSumResult assemble_direct_sum(const std::vector<UnitVectorFamily>& families,
                                    const MetricComponent& space) {
  const int n = space.point_count;
  DirectSumResult result;
  for (const UnitVectorFamily& fam : families) {
    const auto& vecs = fam.vectors.vectors.at(0);
    if (static_cast<int>(vecs.size()) != n)
      throw std::invalid_argument("direct sum: family does not cover the space");
    const double eps = 1.0 / fam.l;
    const double r = std::sqrt(static_cast<double>(fam.l));
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (space.d(x, y) <= r && l2_distance(vecs[x], vecs[y]) > eps + 1e-9)
          throw std::invalid_argument(
              "direct sum: family l=" + std::to_string(fam.l) + " breaks its (R,eps) bound at pair (" +
              std::to_string(x) + "," + std::to_string(y) + ")");
    // minimal M with |phi(x)-phi(y)| >= 1 whenever d >= M
    double m = 0.0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (l2_distance(vecs[x], vecs[y]) < 1.0 - 1e-12)
          m = std::max(m, static_cast<double>(space.d(x, y)) + 1.0);
    result.m_thresholds.push_back(m);
  }
  // F(x) = 1/2 (+)_l (phi_l(x) - phi_l(x0))
  std::vector<std::vector<double>> out(n);
  for (int x = 0; x < n; ++x) {
    for (const UnitVectorFamily& fam : families) {
      const auto& vecs = fam.vectors.vectors.at(0);
      const auto& base = vecs[space.basepoint];
      for (std::size_t j = 0; j < vecs[x].size() || j < base.size(); ++j) {
        const double vx = j < vecs[x].size() ? vecs[x][j] : 0.0;
        const double vb = j < base.size() ? base[j] : 0.0;
        out[x].push_back(0.5 * (vx - vb));
      }
    }
  }
  result.upper_bound_holds = true;
  result.staircase_holds = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double e = l2_distance(out[x], out[y]);
      const double d = static_cast<double>(space.d(x, y));
      result.max_upper_slack = std::max(result.max_upper_slack, e - (d + 1.0));
      if (e > d + 1.0 + 1e-9) result.upper_bound_holds = false;
      int separated = 0;
      for (double m : result.m_thresholds)
        if (d >= m) ++separated;
      if (e + 1e-9 < 0.5 * std::sqrt(static_cast<double>(separated)))
        result.staircase_holds = false;
    }
  }
  result.embedding = EmbeddingTable::single(std::move(out));
  return result;
}

InducedEmbeddingResult induced_embedding(const FiniteGroupTable& group,
                                         const std::vector<int>& subgroup,
                                         const std::vector<std::vector<double>>& phi,
                                         const std::vector<int>& word_length) {
  const int n = group.order();
  std::vector<int> sub_index(n, -1);
  for (std::size_t i = 0; i < subgroup.size(); ++i) sub_index[subgroup[i]] = static_cast<int>(i);
  if (sub_index[group.identity()] < 0)
    throw std::invalid_argument("induced embedding: subgroup lacks identity");
  if (phi.size() != subgroup.size())
    throw std::invalid_argument("induced embedding: table does not cover subgroup");

  // left cosets xH and minimal-length sections, ties by element index
  std::vector<int> coset_of(n, -1);
  std::vector<int> section;
  int cosets = 0;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] != -1) continue;
    int rep = -1;
    for (int h : subgroup) {
      const int x = group.mul(g, h);
      coset_of[x] = cosets;
      if (rep < 0 || word_length[x] < word_length[rep] ||
          (word_length[x] == word_length[rep] && x < rep))
        rep = x;
    }
    section.push_back(rep);
    ++cosets;
  }
  std::size_t dim = 0;
  for (const auto& v : phi) dim = std::max(dim, v.size());

  InducedEmbeddingResult result;
  result.vectors.assign(n, std::vector<double>(dim * cosets, 0.0));
  for (int x = 0; x < n; ++x) {
    const int c = coset_of[x];
    const int xp = group.mul(group.inv(section[c]), x);
    if (sub_index[xp] < 0)
      throw std::logic_error("induced embedding: section inconsistent with cosets");
    const auto& v = phi[sub_index[xp]];
    for (std::size_t j = 0; j < v.size(); ++j)
      result.vectors[x][static_cast<std::size_t>(c) * dim + j] = v[j];
  }
  result.same_coset_isometric = true;
  result.cross_coset_sq_two = true;
  result.cross_coset_orthogonal = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const double e = l2_distance(result.vectors[x], result.vectors[y]);
      if (coset_of[x] == coset_of[y]) {
        const int xp = group.mul(group.inv(section[coset_of[x]]), x);
        const int yp = group.mul(group.inv(section[coset_of[y]]), y);
        if (std::abs(e - l2_distance(phi[sub_index[xp]], phi[sub_index[yp]])) > 1e-12)
          result.same_coset_isometric = false;
      } else {
        if (std::abs(e * e - 2.0) > 1e-9) result.cross_coset_sq_two = false;
        if (std::abs(inner_product(result.vectors[x], result.vectors[y])) > 1e-12)
          result.cross_coset_orthogonal = false;
      }
    }
  }
  return result;
}

GlueResult glue_embeddings(const std::vector<std::vector<double>>& weights,
                           const std::vector<std::vector<std::vector<double>>>& locals,
                           const MetricComponent& space, double R, double eps) {
  const int n = space.point_count;
  const std::size_t pieces = locals.size();
  if (weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("glue: weights do not cover the space");
  std::vector<std::size_t> dim(pieces, 0);
  for (std::size_t i = 0; i < pieces; ++i) {
    if (locals[i].size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("glue: local table does not cover the space");
    for (const auto& v : locals[i]) dim[i] = std::max(dim[i], v.size());
  }
  GlueResult result;
  result.vectors.assign(n, {});
  for (int x = 0; x < n; ++x) {
    if (weights[x].size() != pieces)
      throw std::invalid_argument("glue: weight row has wrong piece count");
    double total = 0.0;
    for (double w : weights[x]) {
      if (w < 0.0) throw std::invalid_argument("glue: negative weight");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("glue: weights do not sum to 1");
    for (std::size_t i = 0; i < pieces; ++i) {
      const double s = std::sqrt(weights[x][i]);
      for (std::size_t j = 0; j < dim[i]; ++j) {
        const double v = j < locals[i][x].size() ? locals[i][x][j] : 0.0;
        result.vectors[x].push_back(s * v);
      }
    }
    result.max_norm_error =
        std::max(result.max_norm_error, std::abs(std::sqrt(norm2(result.vectors[x])) - 1.0));
  }
  result.bound_holds = true;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (static_cast<double>(space.d(x, y)) > R) continue;
      const double e = l2_distance(result.vectors[x], result.vectors[y]);
      result.max_r_pair_distance = std::max(result.max_r_pair_distance, e);
      if (e > eps + std::sqrt(eps) + 1e-9) result.bound_holds = false;
    }
  }
  return result;
}

}  // namespace boxlab
