#include "boxlab/tower.hpp"

#include <bit>
#include <queue>
#include <stdexcept>

namespace boxlab {

int hamming(const BitVec& x, const BitVec& y) {
  if (x.bits != y.bits) throw std::invalid_argument("signature length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < x.words.size(); ++i)
    d += std::popcount(x.words[i] ^ y.words[i]);
  return d;
}

LabeledMultigraph cayley_multigraph(const FiniteGroupTable& group,
                                    const std::vector<int>& symmetric_gens) {
  for (int s : symmetric_gens) {
    bool has_inverse = false;
    for (int t : symmetric_gens) has_inverse |= (t == group.inv(s));
    if (!has_inverse) throw std::invalid_argument("generating set is not symmetric");
  }
  // one representative per pair {s, s^-1}; an involution is its own pair
  std::vector<int> reps;
  for (int s : symmetric_gens) {
    bool skip = false;
    for (int r : reps) skip |= (r == s || r == group.inv(s));
    if (!skip) reps.push_back(s);
  }
  LabeledMultigraph g;
  g.vertex_count = group.order();
  for (int j = 0; j < static_cast<int>(reps.size()); ++j)
    for (int v = 0; v < group.order(); ++v) g.add_edge(v, group.mul(v, reps[j]), j);
  return g;
}

int TowerLevel::apply_generator(int vertex, int generator, bool inverse) const {
  if (generator < 0 || generator >= rank) throw std::out_of_range("generator index");
  if (!inverse) {
    const auto& e = graph.edges[out_edge[static_cast<std::size_t>(vertex) * rank + generator]];
    return e.v;
  }
  const auto& e = graph.edges[in_edge[static_cast<std::size_t>(vertex) * rank + generator]];
  return e.u;
}

int TowerLevel::apply_word(int vertex, const std::vector<int>& signed_word) const {
  for (int s : signed_word) vertex = apply_generator(vertex, std::abs(s) - 1, s < 0);
  return vertex;
}

std::vector<int> invert_signed_word(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (int& s : out) s = -s;
  return out;
}

TowerLevel tower_base_level(int rank) {
  if (rank < 1) throw std::invalid_argument("tower rank must be >= 1");
  if (rank > 20) throw std::invalid_argument("tower rank too large");
  TowerLevel level;
  level.rank = rank;
  const int n = 1 << rank;
  level.graph.vertex_count = n;
  level.out_edge.assign(static_cast<std::size_t>(n) * rank, -1);
  level.in_edge.assign(static_cast<std::size_t>(n) * rank, -1);
  // edge (v, v^bit j) for every vertex and generator; g_j = g_j^-1 in the
  // quotient, so the pair {v, v^j} carries two parallel edges
  for (int j = 0; j < rank; ++j) {
    for (int v = 0; v < n; ++v) {
      const int e = level.graph.add_edge(v, v ^ (1 << j), j);
      level.out_edge[static_cast<std::size_t>(v) * rank + j] = e;
      level.in_edge[(static_cast<std::size_t>(v) ^ (1u << j)) * rank + j] = e;
    }
  }
  level.girth = level.graph.girth_simple();
  return level;
}

TowerLevel tower_level_from_graph(LabeledMultigraph graph) {
  TowerLevel level;
  level.graph = std::move(graph);
  level.girth = level.graph.girth_simple();
  return level;
}

TowerLevel homology_cover(const TowerLevel& base, std::size_t vertex_cap) {
  const LabeledMultigraph& bg = base.graph;
  if (!bg.connected()) throw std::invalid_argument("homology cover: base not connected");
  const int bv = bg.vertex_count;
  const int be = static_cast<int>(bg.edges.size());
  const int d = be - bv + 1;
  if (d < 0 || d > 30) throw std::runtime_error("too large: cycle rank over cover limit");
  const std::size_t cover_v = static_cast<std::size_t>(bv) << d;
  if (cover_v > vertex_cap) throw std::runtime_error("too large: cover exceeds vertex cap");

  // BFS spanning tree from vertex 0, edges in index order
  std::vector<bool> in_tree(be, false);
  {
    auto adj = bg.adjacency();
    std::vector<bool> visited(bv, false);
    std::queue<int> q;
    visited[0] = true;
    q.push(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ei : adj[x]) {
        int y = bg.edges[ei].u == x ? bg.edges[ei].v : bg.edges[ei].u;
        if (!visited[y]) {
          visited[y] = true;
          in_tree[ei] = true;
          q.push(y);
        }
      }
    }
  }
  // non-tree edge -> flipped coordinate
  std::vector<std::uint32_t> flip(be, 0);
  {
    int j = 0;
    for (int ei = 0; ei < be; ++ei)
      if (!in_tree[ei]) flip[ei] = 1u << j++;
  }

  TowerLevel cover;
  cover.rank = base.rank;
  cover.base_edge_count = be;
  cover.graph.vertex_count = static_cast<int>(cover_v);
  const std::uint32_t masks = 1u << d;
  auto vid = [&](int v, std::uint32_t m) {
    return static_cast<int>((static_cast<std::uint64_t>(v) << d) | m);
  };
  cover.graph.edges.reserve(static_cast<std::size_t>(be) << d);
  cover.projection.reserve(static_cast<std::size_t>(be) << d);
  for (int ei = 0; ei < be; ++ei) {
    const auto& e = bg.edges[ei];
    for (std::uint32_t m = 0; m < masks; ++m) {
      cover.graph.add_edge(vid(e.u, m), vid(e.v, m ^ flip[ei]), e.label);
      cover.projection.push_back(ei);
    }
  }
  // lifted walk tables: the lift of base edge ei at source mask m has index
  // ei*2^d + m
  if (base.rank > 0) {
    cover.out_edge.assign(cover_v * base.rank, -1);
    cover.in_edge.assign(cover_v * base.rank, -1);
    for (int v = 0; v < bv; ++v) {
      for (int j = 0; j < base.rank; ++j) {
        const int oe = base.out_edge[static_cast<std::size_t>(v) * base.rank + j];
        const int ie = base.in_edge[static_cast<std::size_t>(v) * base.rank + j];
        for (std::uint32_t m = 0; m < masks; ++m) {
          cover.out_edge[static_cast<std::size_t>(vid(v, m)) * base.rank + j] =
              oe * static_cast<int>(masks) + static_cast<int>(m);
          // backward traversal ends at mask m, so its source mask is m^flip
          cover.in_edge[static_cast<std::size_t>(vid(v, m)) * base.rank + j] =
              ie * static_cast<int>(masks) + static_cast<int>(m ^ flip[ie]);
        }
      }
    }
  }
  // wall signatures: crossing parities of all base edges from vertex 0;
  // revisits must agree (well-definedness of the walls)
  cover.signatures.assign(cover_v, BitVec(be));
  {
    auto adj = cover.graph.adjacency();
    std::vector<bool> visited(cover_v, false);
    std::queue<int> q;
    visited[0] = true;
    q.push(0);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ei : adj[x]) {
        int y = cover.graph.edges[ei].u == x ? cover.graph.edges[ei].v
                                             : cover.graph.edges[ei].u;
        BitVec sig = cover.signatures[x];
        sig.toggle(cover.projection[ei]);
        if (!visited[y]) {
          visited[y] = true;
          cover.signatures[y] = sig;
          q.push(y);
        } else if (!(cover.signatures[y] == sig) && y != x) {
          throw std::logic_error("wall signatures ill-defined: odd crossing cycle");
        }
      }
    }
    for (bool v : visited)
      if (!v) throw std::logic_error("homology cover is not connected");
  }
  cover.girth = cover.graph.girth_simple();
  return cover;
}

Tower build_tower(int rank, int depth, std::size_t vertex_cap) {
  Tower tower;
  if (depth < 1) return tower;
  tower.levels.push_back(tower_base_level(rank));
  while (static_cast<int>(tower.levels.size()) < depth) {
    try {
      tower.levels.push_back(homology_cover(tower.levels.back(), vertex_cap));
    } catch (const std::runtime_error&) {
      tower.truncated = true;
      break;
    }
  }
  return tower;
}

int wall_metric(const TowerLevel& level, int x, int y) {
  if (!level.has_walls())
    throw std::logic_error("no wall structure on this level");
  return hamming(level.signatures[x], level.signatures[y]);
}

std::vector<std::vector<double>> wall_embedding(const TowerLevel& level) {
  if (!level.has_walls())
    throw std::logic_error("no wall structure on this level");
  std::vector<std::vector<double>> table(level.vertex_count());
  for (int v = 0; v < level.vertex_count(); ++v) {
    table[v].resize(level.base_edge_count);
    for (int i = 0; i < level.base_edge_count; ++i)
      table[v][i] = level.signatures[v].get(i) ? 1.0 : 0.0;
  }
  return table;
}

std::vector<int> wall_members(const TowerLevel& level, int base_edge) {
  std::vector<int> members;
  for (int ei = 0; ei < static_cast<int>(level.projection.size()); ++ei)
    if (level.projection[ei] == base_edge) members.push_back(ei);
  return members;
}

}  // namespace boxlab
