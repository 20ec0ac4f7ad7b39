#include "boxlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

namespace boxlab {

int LabeledMultigraph::add_edge(int u, int v, int label) {
  if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
    throw std::invalid_argument("edge endpoint out of range");
  edges.push_back({u, v, label});
  return static_cast<int>(edges.size()) - 1;
}

std::vector<std::vector<int>> LabeledMultigraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj[edges[i].u].push_back(i);
    if (edges[i].v != edges[i].u) adj[edges[i].v].push_back(i);
  }
  return adj;
}

int LabeledMultigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges)
    if (e.u == v || e.v == v) ++d;
  return d;
}

std::vector<int> LabeledMultigraph::bfs_distances(const std::vector<int>& sources) const {
  auto adj = adjacency();
  std::vector<int> dist(vertex_count, kUnreached);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[s] == kUnreached) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int ei : adj[x]) {
      int y = edges[ei].u == x ? edges[ei].v : edges[ei].u;
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> LabeledMultigraph::bfs_distances(int source) const {
  return bfs_distances(std::vector<int>{source});
}

bool LabeledMultigraph::connected() const {
  if (vertex_count == 0) return true;
  auto dist = bfs_distances(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreached; });
}

std::optional<int> LabeledMultigraph::girth_simple() const {
  // dedupe to the simple underlying graph
  std::set<std::pair<int, int>> simple;
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [u, v] : simple) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = kUnreached;
  std::vector<int> dist(vertex_count), parent(vertex_count);
  for (int s = 0; s < vertex_count; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (2 * dist[x] >= best) continue;
      for (int y : adj[x]) {
        if (dist[y] == kUnreached) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

int LabeledMultigraph::components_without(const std::vector<int>& removed_edges) const {
  std::vector<bool> removed(edges.size(), false);
  for (int e : removed_edges) removed[e] = true;
  auto adj = adjacency();
  std::vector<int> comp(vertex_count, -1);
  int n = 0;
  for (int s = 0; s < vertex_count; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = n;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ei : adj[x]) {
        if (removed[ei]) continue;
        int y = edges[ei].u == x ? edges[ei].v : edges[ei].u;
        if (comp[y] < 0) {
          comp[y] = n;
          q.push(y);
        }
      }
    }
    ++n;
  }
  return n;
}

void LabeledMultigraph::write(std::ostream& out) const {
  out << "graph " << vertex_count << " " << edges.size() << "\n";
  for (const Edge& e : edges) out << e.u << " " << e.v << " " << e.label << "\n";
}

LabeledMultigraph LabeledMultigraph::read(std::istream& in) {
  std::string key;
  int v = 0;
  std::size_t m = 0;
  if (!(in >> key >> v >> m) || key != "graph")
    throw std::runtime_error("graph file: expected 'graph V E'");
  LabeledMultigraph g;
  g.vertex_count = v;
  g.edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Edge e{};
    if (!(in >> e.u >> e.v >> e.label)) throw std::runtime_error("graph file: truncated");
    g.add_edge(e.u, e.v, e.label);
  }
  return g;
}

LabeledMultigraph cycle_graph(int n) {
  LabeledMultigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 0);
  return g;
}

LabeledMultigraph path_graph(int n) {
  LabeledMultigraph g;
  g.vertex_count = n;
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, 0);
  return g;
}

LabeledMultigraph complete_graph(int n) {
  LabeledMultigraph g;
  g.vertex_count = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, 0);
  return g;
}

LabeledMultigraph schreier_multigraph(int degree,
                                      const std::vector<std::vector<int>>& action,
                                      const std::vector<int>& inverse_of) {
  LabeledMultigraph g;
  g.vertex_count = degree;
  const int ngens = static_cast<int>(action.size());
  // edge classes: (z, s) ~ (s.z, inverse_of[s]); emit one edge per class
  std::vector<std::vector<bool>> done(ngens, std::vector<bool>(degree, false));
  for (int s = 0; s < ngens; ++s) {
    for (int z = 0; z < degree; ++z) {
      if (done[s][z]) continue;
      done[s][z] = true;
      const int z2 = action[s][z];
      const int si = inverse_of[s];
      if (!(si == s && z2 == z)) done[si][z2] = true;  // partner, unless self-paired
      g.add_edge(z, z2, s);
    }
  }
  return g;
}

}  // namespace boxlab
