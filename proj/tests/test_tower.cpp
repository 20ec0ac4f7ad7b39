#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxlab/tower.hpp"

using namespace boxlab;

TEST_CASE("rank-1 levels are cycles of doubling size") {
  const Tower tower = build_tower(1, 10, 1 << 12);
  REQUIRE(tower.levels.size() == 10);
  for (int k = 1; k <= 10; ++k) {
    const TowerLevel& lv = tower.levels[k - 1];
    const int n = 1 << k;
    CHECK(lv.vertex_count() == n);
    CHECK(static_cast<int>(lv.graph.edges.size()) == n);
    CHECK(lv.graph.connected());
    for (int v = 0; v < n; ++v) CHECK(lv.graph.degree(v) == 2);
    if (k >= 2) CHECK(lv.girth == n);  // a genuine 2^k-cycle
  }
}

TEST_CASE("rank-2 level sizes and girth") {
  const Tower tower = build_tower(2, 2);
  REQUIRE(tower.levels.size() == 2);
  CHECK(tower.levels[0].vertex_count() == 4);
  CHECK(tower.levels[0].graph.edges.size() == 8);
  CHECK(tower.levels[0].girth == 4);
  CHECK(tower.levels[1].vertex_count() == 128);
  CHECK(tower.levels[1].graph.edges.size() == 256);
  CHECK(tower.levels[1].girth == 4);
  // cycle-rank consistency E - V + 1 = 1 + V(r - 1)
  for (const TowerLevel& lv : tower.levels) {
    const int v = lv.vertex_count();
    const int e = static_cast<int>(lv.graph.edges.size());
    CHECK(e - v + 1 == 1 + v * (2 - 1));
  }
}

TEST_CASE("walk tables invert cleanly") {
  const Tower tower = build_tower(2, 2);
  const TowerLevel& lv = tower.levels[1];
  for (int v = 0; v < lv.vertex_count(); v += 7) {
    for (int j = 0; j < lv.rank; ++j) {
      CHECK(lv.apply_generator(lv.apply_generator(v, j, false), j, true) == v);
      CHECK(lv.apply_word(v, invert_signed_word({j + 1, -(2 - j)})) ==
            lv.apply_word(lv.apply_word(v, {2 - j}), {-(j + 1)}));
    }
  }
}

TEST_CASE("generators stop being involutions above level 1") {
  const Tower tower = build_tower(2, 2);
  CHECK(tower.levels[0].apply_word(0, {1, 1}) == 0);  // g^2 = e at level 1
  CHECK(tower.levels[1].apply_word(0, {1, 1}) != 0);  // g^2 crosses distinct walls
}

TEST_CASE("wall metric is dominated by the graph metric") {
  const Tower tower = build_tower(2, 2);
  const TowerLevel& lv = tower.levels[1];
  REQUIRE(lv.has_walls());
  CHECK(lv.base_edge_count == 8);
  for (int x = 0; x < lv.vertex_count(); x += 3) {
    const auto d = lv.graph.bfs_distances(x);
    for (int y = 0; y < lv.vertex_count(); ++y) {
      const int dw = wall_metric(lv, x, y);
      CHECK(dw <= d[y]);
      CHECK(dw == wall_metric(lv, y, x));
    }
  }
}

TEST_CASE("wall embedding realizes the wall metric as squared distance") {
  const Tower tower = build_tower(1, 3);  // C8 over C4
  const TowerLevel& lv = tower.levels[2];
  const auto table = wall_embedding(lv);
  for (int x = 0; x < lv.vertex_count(); ++x)
    for (int y = 0; y < lv.vertex_count(); ++y) {
      double sq = 0;
      for (std::size_t i = 0; i < table[x].size(); ++i) {
        const double d = table[x][i] - table[y][i];
        sq += d * d;
      }
      CHECK(sq == doctest::Approx(wall_metric(lv, x, y)));
    }
}

TEST_CASE("every wall separates the level into two parts") {
  const Tower tower = build_tower(2, 2);
  const TowerLevel& lv = tower.levels[1];
  for (int be = 0; be < lv.base_edge_count; ++be) {
    const auto members = wall_members(lv, be);
    CHECK(members.size() == 32);  // 256 edges over 8 base edges
    CHECK(lv.graph.components_without(members) == 2);
  }
}

TEST_CASE("caps truncate the tower") {
  const Tower tower = build_tower(2, 3, 1000);
  CHECK(tower.truncated);
  CHECK(tower.levels.size() == 2);
}
