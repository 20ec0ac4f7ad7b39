#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "boxlab/graph.hpp"
#include "boxlab/group.hpp"

using namespace boxlab;

TEST_CASE("cycle and path basics") {
  const auto c8 = cycle_graph(8);
  CHECK(c8.vertex_count == 8);
  CHECK(c8.edges.size() == 8);
  CHECK(c8.connected());
  CHECK(c8.girth_simple() == 8);
  CHECK(c8.bfs_distances(0)[4] == 4);

  const auto p5 = path_graph(5);
  CHECK(p5.edges.size() == 4);
  CHECK_FALSE(p5.girth_simple().has_value());  // forest

  const auto k4 = complete_graph(4);
  CHECK(k4.edges.size() == 6);
  CHECK(k4.girth_simple() == 3);
}

TEST_CASE("parallel edges and loops in girth and degree") {
  LabeledMultigraph g;
  g.vertex_count = 2;
  g.add_edge(0, 1, 0);
  g.add_edge(0, 1, 1);
  g.add_edge(0, 0, 2);
  CHECK(g.degree(0) == 3);  // loop counts once
  CHECK(g.degree(1) == 2);
  CHECK_FALSE(g.girth_simple().has_value());  // simple underlying graph is one edge
}

TEST_CASE("components after edge removal") {
  const auto c6 = cycle_graph(6);
  CHECK(c6.components_without({}) == 1);
  CHECK(c6.components_without({0}) == 1);
  CHECK(c6.components_without({0, 3}) == 2);
}

TEST_CASE("graph text round trip") {
  const auto c5 = cycle_graph(5);
  std::stringstream s;
  c5.write(s);
  const auto back = LabeledMultigraph::read(s);
  CHECK(back.vertex_count == 5);
  REQUIRE(back.edges.size() == 5);
  CHECK(back.edges[2].u == c5.edges[2].u);
  CHECK(back.edges[2].label == c5.edges[2].label);
}

TEST_CASE("schreier multigraph edge classes") {
  // Z/4 acting on itself by +1/+3: classes (z,+1)~(z+1,+3) give a plain 4-cycle
  const auto z4 = FiniteGroupTable::cyclic(4);
  std::vector<std::vector<int>> action(2, std::vector<int>(4));
  for (int z = 0; z < 4; ++z) {
    action[0][z] = z4.mul(1, z);
    action[1][z] = z4.mul(3, z);
  }
  const auto g = schreier_multigraph(4, action, {1, 0});
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.size() == 4);
  CHECK(g.girth_simple() == 4);

  // the involution +2 on Z/4 is self-paired: one edge per orbit pair
  std::vector<std::vector<int>> inv_action(1, std::vector<int>(4));
  for (int z = 0; z < 4; ++z) inv_action[0][z] = z4.mul(2, z);
  const auto h = schreier_multigraph(4, inv_action, {0});
  CHECK(h.edges.size() == 2);
  for (int v = 0; v < 4; ++v) CHECK(h.degree(v) == 1);
}
