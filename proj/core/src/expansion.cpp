#include "boxlab/expansion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace boxlab {

std::int64_t edge_boundary(const LabeledMultigraph& graph, const std::vector<bool>& in_set) {
  std::int64_t cut = 0;
  for (const auto& e : graph.edges)
    if (in_set[e.u] != in_set[e.v]) ++cut;
  return cut;
}

CheegerResult cheeger_exact(const LabeledMultigraph& graph) {
  const int n = graph.vertex_count;
  if (n < 2) throw std::invalid_argument("cheeger: need at least 2 vertices");
  if (n > kCheegerExactMaxVertices)
    throw std::invalid_argument("too large: exact cheeger limited to 24 vertices");
  CheegerResult best;
  best.exact = true;
  bool found = false;
  std::vector<bool> in_set(n);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > n / 2 || size == 0) continue;
    for (int v = 0; v < n; ++v) in_set[v] = (mask >> v) & 1;
    const Rational ratio(edge_boundary(graph, in_set), size);
    if (!found || ratio < best.value) {
      found = true;
      best.value = ratio;
      best.witness_set.clear();
      for (int v = 0; v < n; ++v)
        if (in_set[v]) best.witness_set.push_back(v);
    }
  }
  return best;
}

CheegerResult cheeger_spectral(const LabeledMultigraph& graph) {
  const int n = graph.vertex_count;
  if (n < 2) throw std::invalid_argument("cheeger: need at least 2 vertices");
  const int d = graph.degree(0);
  for (int v = 1; v < n; ++v)
    if (graph.degree(v) != d) throw std::invalid_argument("cheeger_spectral: graph not regular");
  if (d == 0) throw std::invalid_argument("cheeger_spectral: degree zero");
  Eigen::MatrixXd lap = Eigen::MatrixXd::Identity(n, n);
  const double invd = 1.0 / static_cast<double>(d);
  for (const auto& e : graph.edges) {
    if (e.u == e.v) {
      // loops count 1 toward the degree, so each contributes 1/d of adjacency
      // mass back on the diagonal
      lap(e.u, e.u) -= invd;
      continue;
    }
    lap(e.u, e.v) -= invd;
    lap(e.v, e.u) -= invd;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("cheeger_spectral: eigensolver failed");
  const double lambda = solver.eigenvalues()(1);
  CheegerResult result;
  result.exact = false;
  result.lower = static_cast<double>(d) * lambda / 2.0;
  result.upper = static_cast<double>(d) * std::sqrt(std::max(0.0, 2.0 * lambda));
  return result;
}

LabeledMultigraph cayley_schreier_graph(const FiniteGroupTable& group,
                                        const std::vector<int>& symmetric_gens) {
  for (int s : symmetric_gens) {
    bool has_inverse = false;
    for (int t : symmetric_gens) has_inverse |= (t == group.inv(s));
    if (!has_inverse) throw std::invalid_argument("generating set is not symmetric");
  }
  std::vector<std::vector<int>> action(symmetric_gens.size());
  std::vector<int> inverse_of(symmetric_gens.size());
  for (std::size_t j = 0; j < symmetric_gens.size(); ++j) {
    action[j].resize(group.order());
    for (int v = 0; v < group.order(); ++v) action[j][v] = group.mul(symmetric_gens[j], v);
    const int inv = group.inv(symmetric_gens[j]);
    inverse_of[j] = -1;
    for (std::size_t t = 0; t < symmetric_gens.size(); ++t)
      if (symmetric_gens[t] == inv) inverse_of[j] = static_cast<int>(t);
  }
  return schreier_multigraph(group.order(), action, inverse_of);
}

MonotonicityReport quotient_monotonicity_check(const FiniteGroupTable& group,
                                               const std::vector<int>& subgroup,
                                               const std::vector<int>& symmetric_gens) {
  const int n = group.order();
  if (n > kCheegerExactMaxVertices)
    throw std::invalid_argument("too large: monotonicity check limited to 24 elements");
  std::set<int> h(subgroup.begin(), subgroup.end());
  if (!h.contains(group.identity())) throw std::invalid_argument("subgroup lacks identity");
  for (int x : h)
    for (int y : h)
      if (!h.contains(group.mul(x, y)))
        throw std::invalid_argument("subgroup set not closed");

  // left cosets gH
  std::vector<int> coset_of(n, -1);
  int cosets = 0;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] != -1) continue;
    for (int x : h) coset_of[group.mul(g, x)] = cosets;
    ++cosets;
  }
  // quotient action: s maps gH to (sg)H; well defined for left cosets
  std::vector<std::vector<int>> action(symmetric_gens.size());
  std::vector<int> inverse_of(symmetric_gens.size());
  for (std::size_t j = 0; j < symmetric_gens.size(); ++j) {
    action[j].assign(cosets, -1);
    for (int g = 0; g < n; ++g) {
      const int image = coset_of[group.mul(symmetric_gens[j], g)];
      if (action[j][coset_of[g]] != -1 && action[j][coset_of[g]] != image)
        throw std::logic_error("coset action ill-defined");
      action[j][coset_of[g]] = image;
    }
    const int inv = group.inv(symmetric_gens[j]);
    inverse_of[j] = -1;
    for (std::size_t t = 0; t < symmetric_gens.size(); ++t)
      if (symmetric_gens[t] == inv) inverse_of[j] = static_cast<int>(t);
  }
  MonotonicityReport report;
  report.h_group = cheeger_exact(cayley_schreier_graph(group, symmetric_gens)).value;
  report.h_quotient =
      cosets >= 2
          ? cheeger_exact(schreier_multigraph(cosets, action, inverse_of)).value
          : Rational(0);
  report.holds = cosets < 2 || !(report.h_quotient < report.h_group);
  return report;
}

FolnerWitness folner_witness(const FreeProduct& fp, int k, Factor side,
                             const GeneratingSet& s, std::size_t cap) {
  const TruncatedWordSet uk = build_truncated_words(fp, k, cap);
  const PermutationRep rep = sigma(fp, k, cap);
  const LabeledMultigraph graph = schreier_graph(fp, rep, s);

  FolnerWitness witness;
  witness.side = side;
  std::vector<bool> in_set(uk.size(), false);
  in_set[0] = true;  // the empty word
  witness.members.push_back(0);
  for (int i = 1; i < uk.size(); ++i) {
    if (uk.words[i].syllables.back().factor == side) {
      in_set[i] = true;
      witness.members.push_back(i);
    }
  }
  witness.boundary = edge_boundary(graph, in_set);
  witness.ratio = Rational(witness.boundary, static_cast<std::int64_t>(witness.members.size()));
  witness.is_half_or_less = 2 * witness.members.size() <= static_cast<std::size_t>(uk.size());
  witness.generator_count = static_cast<std::int64_t>(s.size());
  return witness;
}

}  // namespace boxlab
