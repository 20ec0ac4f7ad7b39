#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "boxlab/tree_partition.hpp"

using namespace boxlab;

TEST_CASE("doubled gromov product on a path") {
  const auto p = path_graph(7);  // rooted at 0, a line
  // on a line through the base, the meet of x and y is min(x, y)
  CHECK(gromov_product_doubled(p, 0, 2, 3) == 4);
  CHECK(gromov_product_doubled(p, 0, 5, 5) == 10);
  CHECK(gromov_product_doubled(p, 0, 0, 4) == 0);
  CHECK_THROWS_AS(gromov_product_doubled(cycle_graph(4), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("clusters on a star collapse to one per annulus") {
  // star with 5 leaves: depth-1 vertices all have pairwise 2(x|y) = 0,
  // threshold at k=0 is L*(2k-1) < 0, so they form a single cluster
  LabeledMultigraph star;
  star.vertex_count = 6;
  for (int i = 1; i <= 5; ++i) star.add_edge(0, i, i - 1);
  const auto dec = cluster_decomposition(star, 2);
  // depths 0 and 1 both fall in annulus 0, whose threshold is trivial
  CHECK(dec.clusters.size() == 1);
  for (int v = 0; v < 6; ++v) CHECK(dec.annulus[v] == 0);
}

TEST_CASE("clusters on a long path") {
  const auto p = path_graph(11);  // depths 0..10
  const auto dec = cluster_decomposition(p, 2);
  // annuli: depth 0 -> 0, depths 1..2 -> 0, 3..4 -> 1, 5..6 -> 2, 7..8 -> 3, 9..10 -> 4
  CHECK(dec.annulus[0] == 0);
  CHECK(dec.annulus[2] == 0);
  CHECK(dec.annulus[3] == 1);
  CHECK(dec.annulus[10] == 4);
  // a path has one cluster per annulus
  CHECK(dec.clusters.size() == 5);
  for (const auto& c : dec.clusters) CHECK(!c.empty());
  // neighborhoods extend by L/2 = 1 on each side
  const auto& w1 = dec.neighborhoods[dec.cluster[3]];
  CHECK(std::set<int>(w1.begin(), w1.end()) == std::set<int>({2, 3, 4, 5}));
}

TEST_CASE("partition of unity basics on a path") {
  const auto p = path_graph(11);
  const auto pu = partition_of_unity(p, 2);
  for (int v = 0; v < 11; ++v) {
    double s = 0.0;
    for (double w : pu.weights[v]) {
      CHECK(w >= 0.0);
      s += w;
    }
    CHECK(s == doctest::Approx(1.0));
  }
  // weights are supported in the stated neighborhoods
  for (std::size_t i = 0; i < pu.support.size(); ++i) {
    const std::set<int> sup(pu.support[i].begin(), pu.support[i].end());
    for (int v = 0; v < 11; ++v)
      if (!sup.count(v)) CHECK(pu.weights[v][i] == 0.0);
  }
  CHECK(pu.max_edge_l1 <= 2.0);
  CHECK(pu.max_l1_ratio <= 2.0 + 1e-12);
}

TEST_CASE("random trees obey the scale invariants") {
  for (unsigned seed : {1u, 2u, 3u}) {
    const auto t = random_tree(300, 5, seed);
    CHECK(t.edges.size() == 299);
    for (int v = 0; v < t.vertex_count; ++v) CHECK(t.degree(v) <= 5);
    for (int L : {2, 4}) {
      const auto dec = cluster_decomposition(t, L);
      std::vector<std::vector<int>> dist;
      for (int v = 0; v < t.vertex_count; ++v) dist.push_back(t.bfs_distances(v));
      for (std::size_t i = 0; i < dec.clusters.size(); ++i) {
        // diameter of every cluster is at most 3L
        for (int x : dec.clusters[i])
          for (int y : dec.clusters[i]) CHECK(dist[x][y] <= 3 * L);
        // distinct clusters in the same annulus are more than L apart
        for (std::size_t j = i + 1; j < dec.clusters.size(); ++j) {
          if (dec.cluster_annulus[i] != dec.cluster_annulus[j]) continue;
          for (int x : dec.clusters[i])
            for (int y : dec.clusters[j]) CHECK(dist[x][y] > L);
        }
      }
      const auto pu = partition_of_unity(t, L);
      // support diameter at most 4L, Lipschitz ratio at most 40/L
      for (const auto& sup : pu.support)
        for (int x : sup)
          for (int y : sup) CHECK(dist[x][y] <= 4 * L);
      CHECK(pu.max_edge_l1 <= 40.0 / L + 1e-12);
    }
  }
}

TEST_CASE("exhaustive certificate at small scale") {
  std::vector<LabeledMultigraph> trees;
  trees.push_back(path_graph(40));
  trees.push_back(random_tree(200, 4, 7));
  const auto cert = equi_exact_certificate(trees, 1.0, 2.0);
  CHECK(cert.L == 20);  // ceil(40 * 1 / 2)
  CHECK(cert.C == 80);
  CHECK(cert.verified);
  for (const auto& tc : cert.per_tree) {
    CHECK(tc.verified);
    CHECK(tc.verified_pairs > 0);
    CHECK(tc.max_l1_r_pairs <= 2.0 + 1e-12);
  }
}

TEST_CASE("separated cover partition") {
  const auto space = MetricComponent::from_graph(path_graph(20));
  // core around the ends, one interior piece; L/2-enlargements cover the path
  const std::vector<int> core{0, 1, 2, 3, 4, 15, 16, 17, 18, 19};
  const std::vector<std::vector<int>> pieces{{8, 9, 10, 11}};
  const auto part = separated_cover_partition(space, core, pieces, 4);
  for (int v = 0; v < 20; ++v) {
    double s = 0.0;
    for (double w : part.weights[v]) s += w;
    CHECK(s == doctest::Approx(1.0));
  }
  CHECK(part.supports.size() == 2);
  CHECK(part.max_edge_l1 <= 2.0);
  // pieces 2 apart at scale 4 violate separation
  CHECK_THROWS_AS(separated_cover_partition(space, core, {{8, 9}, {11, 12}}, 4),
                  std::invalid_argument);
}
