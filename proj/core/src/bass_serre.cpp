#include "boxlab/bass_serre.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace boxlab {

TreeVertex canonical_coset(const FreeProduct& fp, const NormalFormWord& g, Factor side) {
  (void)fp;
  TreeVertex v{g, side};
  if (!v.rep.empty() && v.rep.syllables.back().factor == side)
    v.rep.syllables.pop_back();
  return v;
}

namespace {

// Parent toward the root coset A; nullopt at the root.
std::optional<TreeVertex> tree_parent(const TreeVertex& v) {
  if (v.rep.empty()) {
    if (v.side == Factor::A) return std::nullopt;
    return TreeVertex{NormalFormWord{}, Factor::A};
  }
  // canonical rep ends with a syllable of the other side; the adjacent coset
  // rep*other(side) strips it
  TreeVertex p{v.rep, other(v.side)};
  p.rep.syllables.pop_back();
  return p;
}

int tree_depth(TreeVertex v) {
  int d = 0;
  for (auto p = tree_parent(v); p; p = tree_parent(v)) {
    v = *p;
    ++d;
  }
  return d;
}

}  // namespace

int tree_distance(const FreeProduct& fp, const NormalFormWord& g, Factor side1,
                  const NormalFormWord& h, Factor side2) {
  TreeVertex x = canonical_coset(fp, g, side1);
  TreeVertex y = canonical_coset(fp, h, side2);
  int dx = tree_depth(x);
  int dy = tree_depth(y);
  int dist = 0;
  while (dx > dy) {
    x = *tree_parent(x);
    --dx;
    ++dist;
  }
  while (dy > dx) {
    y = *tree_parent(y);
    --dy;
    ++dist;
  }
  while (!(x == y)) {
    x = *tree_parent(x);
    y = *tree_parent(y);
    dist += 2;
  }
  return dist;
}

TreeBall tree_ball(const FreeProduct& fp, int radius, std::size_t cap) {
  TreeBall ball;
  ball.radius = radius;
  TreeVertex root{NormalFormWord{}, Factor::A};
  ball.vertices.push_back(root);
  ball.index.emplace(root, 0);
  ball.graph.vertex_count = 1;
  std::vector<int> depth{0};
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (depth[i] >= radius) continue;
    const TreeVertex v = ball.vertices[i];
    const Factor ns = other(v.side);
    const FiniteGroupTable& table = fp.factor(v.side);
    for (int s = 0; s < table.order(); ++s) {
      // edge rep*s joins the cosets rep*s*side and rep*s*other(side)
      NormalFormWord edge_word =
          fp.multiply(v.rep, fp.word_of(v.side, s));
      TreeVertex nb = canonical_coset(fp, edge_word, ns);
      auto [it, fresh] = ball.index.emplace(nb, static_cast<int>(ball.vertices.size()));
      if (fresh) {
        if (ball.vertices.size() >= cap) throw std::runtime_error("too large: tree ball cap");
        ball.vertices.push_back(nb);
        ball.graph.vertex_count = static_cast<int>(ball.vertices.size());
        depth.push_back(depth[i] + 1);
      }
      // emit each tree edge once, from its A-side endpoint
      if (v.side == Factor::A) {
        ball.graph.add_edge(static_cast<int>(i), it->second,
                            static_cast<int>(ball.edge_words.size()));
        ball.edge_words.push_back(edge_word);
      } else if (fresh) {
        ball.graph.add_edge(it->second, static_cast<int>(i),
                            static_cast<int>(ball.edge_words.size()));
        ball.edge_words.push_back(edge_word);
      }
    }
  }
  return ball;
}

std::vector<BasisElement> commutator_basis(const FreeProduct& fp,
                                           std::optional<int> tau,
                                           const std::vector<int>& gens_a,
                                           const std::vector<int>& gens_b) {
  std::vector<int> len_a, len_b;
  if (tau) {
    len_a = cayley_word_lengths(fp.a(), gens_a);
    len_b = cayley_word_lengths(fp.b(), gens_b);
  }
  std::vector<BasisElement> basis;
  for (int a = 0; a < fp.a().order(); ++a) {
    if (a == fp.a().identity()) continue;
    if (tau && len_a[a] > *tau) continue;
    for (int b = 0; b < fp.b().order(); ++b) {
      if (b == fp.b().identity()) continue;
      if (tau && len_b[b] > *tau) continue;
      basis.push_back({a, b, fp.commutator(a, b)});
    }
  }
  return basis;
}

bool kernel_membership(const FreeProduct& fp, const NormalFormWord& w) {
  auto [pa, pb] = fp.project_to_direct_product(w);
  return pa == fp.a().identity() && pb == fp.b().identity();
}

NormalFormWord evaluate_basis_word(const FreeProduct& fp,
                                   const std::vector<BasisElement>& basis,
                                   const BasisWord& bw) {
  NormalFormWord out;
  for (int s : bw) {
    const std::size_t i = static_cast<std::size_t>(std::abs(s)) - 1;
    if (i >= basis.size()) throw std::out_of_range("basis letter index");
    out = fp.multiply(out, s > 0 ? basis[i].word : fp.inverse(basis[i].word));
  }
  return out;
}

BasisWord express_in_basis(const FreeProduct& fp,
                           const std::vector<BasisElement>& basis,
                           const NormalFormWord& w) {
  if (!kernel_membership(fp, w))
    throw std::invalid_argument("not a kernel element");
  // basis letter id of [a,b], or 0 when either entry is the identity
  auto letter = [&](int a, int b) -> int {
    if (a == fp.a().identity() || b == fp.b().identity()) return 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].a == a && basis[i].b == b) return static_cast<int>(i) + 1;
    throw std::invalid_argument("basis does not cover the required commutator");
  };
  // Reidemeister-Schreier over the transversal {alpha*beta}: an A-syllable a
  // read in state (alpha, beta) contributes [alpha,beta][alpha*a,beta]^{-1};
  // B-syllables only move the state.
  BasisWord out;
  auto emit = [&](int signed_letter) {
    if (signed_letter == 0) return;
    if (!out.empty() && out.back() == -signed_letter)
      out.pop_back();
    else
      out.push_back(signed_letter);
  };
  int alpha = fp.a().identity();
  int beta = fp.b().identity();
  for (const Syllable& s : w.syllables) {
    if (s.factor == Factor::A) {
      emit(letter(alpha, beta));
      alpha = fp.a().mul(alpha, s.element);
      emit(-letter(alpha, beta));
    } else {
      beta = fp.b().mul(beta, s.element);
    }
  }
  return out;
}

BasisBall basis_ball(const FreeProduct& fp, const std::vector<BasisElement>& basis,
                     int radius, std::size_t cap) {
  BasisBall ball;
  ball.words.push_back(NormalFormWord{});
  ball.length.push_back(0);
  ball.index.emplace(NormalFormWord{}, 0);
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    if (ball.length[i] >= radius) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (int sign : {+1, -1}) {
        NormalFormWord next = fp.multiply(
            ball.words[i], sign > 0 ? basis[j].word : fp.inverse(basis[j].word));
        auto [it, fresh] = ball.index.emplace(next, static_cast<int>(ball.words.size()));
        (void)it;
        if (fresh) {
          if (ball.words.size() >= cap)
            throw std::runtime_error("too large: basis ball cap");
          ball.words.push_back(std::move(next));
          ball.length.push_back(ball.length[i] + 1);
        }
      }
    }
  }
  return ball;
}

QiReport qi_report(const FreeProduct& fp, int L, std::size_t cap) {
  QiReport report;
  report.radius = L;
  const auto basis = commutator_basis(fp);
  for (const BasisElement& s : basis)
    if (tree_distance(fp, s.word, Factor::A, NormalFormWord{}, Factor::A) != 4)
      report.basis_distance_four = false;
  const BasisBall ball = basis_ball(fp, basis, L, cap);
  for (std::size_t i = 0; i < ball.words.size(); ++i) {
    const int len = ball.length[i];
    const int dt =
        tree_distance(fp, ball.words[i], Factor::A, NormalFormWord{}, Factor::A);
    ++report.checked;
    if (4 * len < dt || len > dt + 1) ++report.violations;
    if (len > 0)
      report.max_ratio_dt_over_len =
          std::max(report.max_ratio_dt_over_len, static_cast<double>(dt) / len);
    report.max_len_minus_dt = std::max(report.max_len_minus_dt, len - dt);
  }
  return report;
}

}  // namespace boxlab
