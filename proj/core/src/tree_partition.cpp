#include "boxlab/tree_partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace boxlab {

namespace {

void require_tree(const LabeledMultigraph& tree) {
  if (!tree.connected() ||
      static_cast<int>(tree.edges.size()) != tree.vertex_count - 1)
    throw std::invalid_argument("not a tree");
}

// multi-source BFS distance to a vertex set (kUnreached if set empty)
std::vector<int> distance_to_set(const LabeledMultigraph& g, const std::vector<int>& set) {
  if (set.empty()) return std::vector<int>(g.vertex_count, kUnreached);
  return g.bfs_distances(set);
}

std::vector<std::pair<int, double>> sparse_row(const std::vector<double>& row) {
  std::vector<std::pair<int, double>> out;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0.0) out.emplace_back(static_cast<int>(i), row[i]);
  return out;
}

double l1_diff(const std::vector<std::pair<int, double>>& x,
               const std::vector<std::pair<int, double>>& y) {
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first))
      s += std::abs(x[i++].second);
    else if (i == x.size() || y[j].first < x[i].first)
      s += std::abs(y[j++].second);
    else {
      s += std::abs(x[i].second - y[j].second);
      ++i;
      ++j;
    }
  }
  return s;
}

}  // namespace

int gromov_product_doubled(const LabeledMultigraph& tree, int base, int x, int y) {
  require_tree(tree);
  const auto from_base = tree.bfs_distances(base);
  const auto from_x = tree.bfs_distances(x);
  return from_base[x] + from_base[y] - from_x[y];
}

ClusterDecomposition cluster_decomposition(const LabeledMultigraph& tree, int L, int base) {
  require_tree(tree);
  if (L < 1) throw std::invalid_argument("scale L must be >= 1");
  ClusterDecomposition dec;
  dec.L = L;
  dec.base = base;
  const int n = tree.vertex_count;
  const auto depth = tree.bfs_distances(base);

  // BFS parents toward the base, for ancestor climbing
  std::vector<int> parent(n, -1);
  {
    auto adj = tree.adjacency();
    for (int v = 0; v < n; ++v)
      for (int ei : adj[v]) {
        const auto& e = tree.edges[ei];
        const int w = e.u == v ? e.v : e.u;
        if (depth[w] == depth[v] - 1) parent[v] = w;
      }
  }
  auto ancestor_at = [&](int v, int target_depth) {
    while (depth[v] > target_depth) v = parent[v];
    return v;
  };

  dec.annulus.resize(n);
  dec.cluster.assign(n, -1);
  // annulus k holds depths in [kL,(k+1)L], boundary to the lower annulus;
  // clusters inside annulus k share the ancestor at depth ceil(L(2k-1)/2),
  // which is the 2(x|y) >= L(2k-1) relation on a tree
  std::vector<std::pair<long long, int>> keys(n);  // (key, vertex)
  for (int v = 0; v < n; ++v) {
    const int k = depth[v] == 0 ? 0 : (depth[v] - 1) / L;
    dec.annulus[v] = k;
    const int h = std::max(0, (L * (2 * k - 1) + 1) / 2);
    keys[v] = {static_cast<long long>(k) * (n + 1) + ancestor_at(v, h), v};
  }
  std::sort(keys.begin(), keys.end());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const int v = keys[i].second;
    if (i == 0 || keys[i].first != keys[i - 1].first) {
      dec.cluster[v] = static_cast<int>(dec.clusters.size());
      dec.clusters.push_back({v});
      dec.cluster_annulus.push_back(dec.annulus[v]);
    } else {
      dec.cluster[v] = dec.cluster[keys[i - 1].second];
      dec.clusters[dec.cluster[v]].push_back(v);
    }
  }
  // W_i = C_i(L/2)
  for (const auto& members : dec.clusters) {
    const auto dist = distance_to_set(tree, members);
    std::vector<int> w;
    for (int v = 0; v < n; ++v)
      if (dist[v] != kUnreached && 2 * dist[v] <= L) w.push_back(v);
    dec.neighborhoods.push_back(std::move(w));
  }
  return dec;
}

PartitionOfUnity partition_of_unity(const LabeledMultigraph& tree, int L, int base) {
  const ClusterDecomposition dec = cluster_decomposition(tree, L, base);
  const int n = tree.vertex_count;
  const int nc = static_cast<int>(dec.clusters.size());
  PartitionOfUnity part;
  part.support = dec.neighborhoods;
  part.weights.assign(n, std::vector<double>(nc, 0.0));

  std::vector<std::vector<double>> numer(n, std::vector<double>(nc, 0.0));
  const std::int64_t all_in = tree.vertex_count + 1;  // W = whole tree
  for (int i = 0; i < nc; ++i) {
    std::vector<bool> in_w(n, false);
    for (int v : part.support[i]) in_w[v] = true;
    std::vector<int> complement;
    for (int v = 0; v < n; ++v)
      if (!in_w[v]) complement.push_back(v);
    if (complement.empty()) {
      for (int v = 0; v < n; ++v) numer[v][i] = static_cast<double>(all_in);
      continue;
    }
    const auto dist = distance_to_set(tree, complement);
    for (int v : part.support[i]) numer[v][i] = static_cast<double>(dist[v]);
  }
  for (int v = 0; v < n; ++v) {
    double denom = 0.0;
    for (int i = 0; i < nc; ++i) denom += numer[v][i];
    if (denom <= 0.0)
      throw std::logic_error("partition of unity: vertex " + std::to_string(v) +
                             " lies in no neighborhood");
    for (int i = 0; i < nc; ++i) part.weights[v][i] = numer[v][i] / denom;
  }

  std::vector<std::vector<std::pair<int, double>>> sparse(n);
  for (int v = 0; v < n; ++v) sparse[v] = sparse_row(part.weights[v]);
  for (const auto& e : tree.edges)
    part.max_edge_l1 = std::max(part.max_edge_l1, l1_diff(sparse[e.u], sparse[e.v]));
  // sampled distant pairs for the l1/d ratio: a few BFS sources, many targets
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int sources = std::min(40, n);
  const int targets = std::min(400, n);
  for (int s = 0; s < sources; ++s) {
    const int x = pick(rng);
    const auto from_x = tree.bfs_distances(x);
    for (int t = 0; t < targets; ++t) {
      const int y = pick(rng);
      if (y == x) continue;
      part.max_l1_ratio =
          std::max(part.max_l1_ratio, l1_diff(sparse[x], sparse[y]) / from_x[y]);
    }
  }
  part.max_l1_ratio = std::max(part.max_l1_ratio, part.max_edge_l1);
  return part;
}

EquiExactCertificate equi_exact_certificate(const std::vector<LabeledMultigraph>& trees,
                                            double R, double eps) {
  if (!(R > 0.0) || !(eps > 0.0)) throw std::invalid_argument("R and eps must be positive");
  EquiExactCertificate cert;
  cert.R = R;
  cert.eps = eps;
  cert.L = std::max(1, static_cast<int>(std::ceil(40.0 * R / eps)));
  cert.C = 4 * cert.L;
  cert.verified = true;
  for (const auto& tree : trees) {
    const PartitionOfUnity part = partition_of_unity(tree, cert.L);
    TreeCertificate tc;
    tc.L = cert.L;
    tc.C = cert.C;
    tc.verified = true;
    const int n = tree.vertex_count;
    std::vector<std::vector<std::pair<int, double>>> sparse(n);
    for (int v = 0; v < n; ++v) sparse[v] = sparse_row(part.weights[v]);
    for (int x = 0; x < n; ++x) {
      const auto dist = tree.bfs_distances(x);
      for (int y = x + 1; y < n; ++y) {
        if (dist[y] > R) continue;
        const double l1 = l1_diff(sparse[x], sparse[y]);
        tc.max_l1_r_pairs = std::max(tc.max_l1_r_pairs, l1);
        ++tc.verified_pairs;
        if (l1 > eps + 1e-12) tc.verified = false;
      }
    }
    // uniform support diameter bound
    for (const auto& w : part.support) {
      if (w.empty()) continue;
      const auto d0 = tree.bfs_distances(w.front());
      for (int v : w)
        if (d0[v] > cert.C) tc.verified = false;
    }
    cert.verified = cert.verified && tc.verified;
    cert.per_tree.push_back(tc);
  }
  return cert;
}

SeparatedCoverPartition separated_cover_partition(const MetricComponent& space,
                                                  const std::vector<int>& core,
                                                  const std::vector<std::vector<int>>& pieces,
                                                  int L) {
  if (L < 1) throw std::invalid_argument("scale L must be >= 1");
  const int n = space.point_count;
  std::vector<bool> in_core(n, false);
  for (int v : core) in_core[v] = true;

  std::vector<std::vector<int>> remainders;
  for (const auto& piece : pieces) {
    std::vector<int> r;
    for (int v : piece)
      if (!in_core[v]) r.push_back(v);
    remainders.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < remainders.size(); ++i)
    for (std::size_t j = i + 1; j < remainders.size(); ++j)
      for (int x : remainders[i])
        for (int y : remainders[j])
          if (space.d(x, y) < L)
            throw std::invalid_argument("pieces " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are less than L apart");

  SeparatedCoverPartition part;
  auto enlarge = [&](const std::vector<int>& set) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
      for (int s : set)
        if (2 * space.d(v, s) <= L) {
          out.push_back(v);
          break;
        }
    }
    return out;
  };
  part.supports.push_back(enlarge(core));
  for (const auto& r : remainders) part.supports.push_back(enlarge(r));

  const std::size_t nf = part.supports.size();
  part.weights.assign(n, std::vector<double>(nf, 0.0));
  for (std::size_t i = 0; i < nf; ++i) {
    std::vector<bool> in_w(n, false);
    for (int v : part.supports[i]) in_w[v] = true;
    for (int v = 0; v < n; ++v) {
      if (!in_w[v]) continue;
      std::int64_t nearest = -1;
      for (int w = 0; w < n; ++w)
        if (!in_w[w] && (nearest < 0 || space.d(v, w) < nearest)) nearest = space.d(v, w);
      part.weights[v][i] = static_cast<double>(nearest < 0 ? n + 1 : nearest);
    }
  }
  for (int v = 0; v < n; ++v) {
    double denom = 0.0;
    for (double w : part.weights[v]) denom += w;
    if (denom <= 0.0)
      throw std::logic_error("separated cover: point " + std::to_string(v) +
                             " is uncovered");
    for (double& w : part.weights[v]) w /= denom;
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (space.d(x, y) != 1) continue;
      double l1 = 0.0;
      for (std::size_t i = 0; i < nf; ++i) l1 += std::abs(part.weights[x][i] - part.weights[y][i]);
      part.max_edge_l1 = std::max(part.max_edge_l1, l1);
    }
  return part;
}

LabeledMultigraph random_tree(int vertices, int max_degree, unsigned seed) {
  if (vertices < 1) throw std::invalid_argument("need at least one vertex");
  if (max_degree < 2 && vertices > 2)
    throw std::invalid_argument("max degree too small for a tree");
  LabeledMultigraph g;
  g.vertex_count = vertices;
  std::mt19937 rng(seed);
  std::vector<int> degree(vertices, 0);
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    int u = pick(rng);
    while (degree[u] >= max_degree) u = pick(rng);
    g.add_edge(u, v, 0);
    ++degree[u];
    ++degree[v];
  }
  return g;
}

}  // namespace boxlab
