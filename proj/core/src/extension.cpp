#include "boxlab/extension.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "boxlab/graph.hpp"

namespace boxlab {

namespace {

// Signed tower walk word of a commutator-basis word (same +-(i+1) convention).
std::vector<int> to_walk_word(const BasisWord& bw) { return bw; }

struct QuotientModel {
  const FreeProduct* fp = nullptr;
  const TowerLevel* level = nullptr;
  std::vector<BasisElement> basis;
  std::vector<std::vector<int>> tree_word;  // vertex -> signed word from 0
  int ab_order = 0;                         // |A x B|

  int ab_index(int a, int b) const { return a * fp->b().order() + b; }
  std::pair<int, int> ab_of(int q) const { return {q / fp->b().order(), q % fp->b().order()}; }

  NormalFormWord section(int q) const {
    auto [a, b] = ab_of(q);
    return fp->multiply(fp->word_of(Factor::A, a), fp->word_of(Factor::B, b));
  }

  std::size_t states() const {
    return static_cast<std::size_t>(ab_order) * level->vertex_count();
  }
  std::size_t state(int q, int v) const {
    return static_cast<std::size_t>(q) * level->vertex_count() + v;
  }
};

// vertex -> signed generator word along a BFS tree from vertex 0
std::vector<std::vector<int>> bfs_tree_words(const TowerLevel& level) {
  const int n = level.vertex_count();
  std::vector<std::vector<int>> word(n);
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int j = 0; j < level.rank; ++j) {
      for (bool inv : {false, true}) {
        const int w = level.apply_generator(v, j, inv);
        if (seen[w]) continue;
        seen[w] = true;
        word[w] = word[v];
        word[w].push_back(inv ? -(j + 1) : j + 1);
        q.push(w);
      }
    }
  }
  for (bool s : seen)
    if (!s) throw std::logic_error("tower level not connected");
  return word;
}

// transition table of right multiplication by one factor generator
struct GeneratorAction {
  FactorElement g;
  std::vector<std::size_t> next;  // state -> state
};

GeneratorAction build_action(const QuotientModel& model, FactorElement g) {
  const FreeProduct& fp = *model.fp;
  const TowerLevel& level = *model.level;
  const int n = level.vertex_count();
  const NormalFormWord gw = fp.word_of(g.factor, g.element);
  const NormalFormWord gw_inv = fp.inverse(gw);

  // conjugation automorphism of the fiber: alpha(v) = vertex of g^-1 d g
  std::vector<std::vector<int>> conj(model.basis.size());
  for (std::size_t j = 0; j < model.basis.size(); ++j)
    conj[j] = to_walk_word(express_in_basis(
        fp, model.basis, fp.multiply({gw_inv, model.basis[j].word, gw})));
  std::vector<int> alpha(n, -1);
  alpha[0] = 0;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int j = 0; j < level.rank; ++j) {
      for (bool inv : {false, true}) {
        const int w = level.apply_generator(v, j, inv);
        const int image = level.apply_word(
            alpha[v], inv ? invert_signed_word(conj[j]) : conj[j]);
        if (alpha[w] == -1) {
          alpha[w] = image;
          q.push(w);
        } else if (alpha[w] != image) {
          throw std::logic_error("conjugation does not descend to the fiber");
        }
      }
    }
  }

  GeneratorAction action;
  action.g = g;
  action.next.resize(model.states());
  for (int qi = 0; qi < model.ab_order; ++qi) {
    auto [a, b] = model.ab_of(qi);
    const int q2 = g.factor == Factor::A
                       ? model.ab_index(fp.a().mul(a, g.element), b)
                       : model.ab_index(a, fp.b().mul(b, g.element));
    // cocycle s(q g-bar)^-1 s(q) g, a kernel element, as a fiber vertex
    const NormalFormWord cocycle =
        fp.multiply({fp.inverse(model.section(q2)), model.section(qi), gw});
    const int vc = level.apply_word(
        0, to_walk_word(express_in_basis(fp, model.basis, cocycle)));
    for (int v = 0; v < n; ++v)
      action.next[model.state(qi, v)] =
          model.state(q2, level.apply_word(vc, model.tree_word[alpha[v]]));
  }
  return action;
}

std::vector<int> bfs_lengths(const QuotientModel& model,
                             const std::vector<GeneratorAction>& actions,
                             std::size_t start) {
  std::vector<int> dist(model.states(), -1);
  dist[start] = 0;
  std::queue<std::size_t> q;
  q.push(start);
  while (!q.empty()) {
    std::size_t x = q.front();
    q.pop();
    for (const auto& act : actions) {
      const std::size_t y = act.next[x];
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::vector<FactorElement> symmetric_pair(const FreeProduct& fp, FactorElement g) {
  std::vector<FactorElement> out{g};
  const int inv = fp.factor(g.factor).inv(g.element);
  if (inv != g.element) out.push_back({g.factor, inv});
  return out;
}

}  // namespace

ExtensionExperiment extension_experiment(const FreeProduct& fp, int k, std::size_t cap) {
  ExtensionExperiment report;
  report.k = k;
  report.tau = 1;  // every factor generator is a generating-set element itself

  const int rank = (fp.a().order() - 1) * (fp.b().order() - 1);
  Tower tower = build_tower(rank, k, cap);
  if (tower.truncated || static_cast<int>(tower.levels.size()) < k)
    throw std::runtime_error("too large: tower level exceeds cap");
  const TowerLevel& level = tower.levels[k - 1];

  QuotientModel model;
  model.fp = &fp;
  model.level = &level;
  model.basis = commutator_basis(fp);
  if (static_cast<int>(model.basis.size()) != rank)
    throw std::logic_error("basis size mismatch");
  model.tree_word = bfs_tree_words(level);
  model.ab_order = fp.a().order() * fp.b().order();
  if (model.states() > cap) throw std::runtime_error("too large: quotient exceeds cap");

  const GeneratingSet full = GeneratingSet::full(fp.a(), fp.b());
  std::vector<GeneratorAction> actions;
  for (const FactorElement& g : full.generators()) actions.push_back(build_action(model, g));

  // factor relations: following a1 then a2 must agree with a1*a2
  report.relations_hold = true;
  auto action_of = [&](FactorElement g) -> const GeneratorAction& {
    for (const auto& act : actions)
      if (act.g == g) return act;
    throw std::logic_error("missing generator action");
  };
  for (Factor f : {Factor::A, Factor::B}) {
    const FiniteGroupTable& table = fp.factor(f);
    for (int x = 0; x < table.order(); ++x) {
      if (x == table.identity()) continue;
      for (int y = 0; y < table.order(); ++y) {
        if (y == table.identity()) continue;
        const int xy = table.mul(x, y);
        const auto& ax = action_of({f, x});
        const auto& ay = action_of({f, y});
        for (std::size_t s = 0; s < model.states(); ++s) {
          const std::size_t via = ay.next[ax.next[s]];
          const std::size_t direct = xy == table.identity() ? s : action_of({f, xy}).next[s];
          if (via != direct) report.relations_hold = false;
        }
      }
    }
  }

  const int id_q = model.ab_index(fp.a().identity(), fp.b().identity());
  const std::size_t id_state = model.state(id_q, 0);
  const std::vector<int> quotient_len = bfs_lengths(model, actions, id_state);
  std::size_t reached = 0;
  for (int d : quotient_len) reached += (d >= 0);
  report.group_order = reached;
  report.fiber_order = static_cast<std::size_t>(level.vertex_count());
  report.order_consistent =
      reached == model.states() &&
      reached == static_cast<std::size_t>(model.ab_order) * report.fiber_order;

  const std::vector<int> comb_len = level.graph.bfs_distances(0);
  report.lower_holds = true;
  report.upper_holds = true;
  for (int v = 0; v < level.vertex_count(); ++v) {
    const int lbar = quotient_len[model.state(id_q, v)];
    const int lcomb = comb_len[v];
    report.fiber_quotient_length.push_back(lbar);
    report.fiber_comb_length.push_back(lcomb);
    if (lcomb - 1 > lbar) report.lower_holds = false;
    if (lbar > 4 * report.tau * lcomb) report.upper_holds = false;
  }

  // a second proper length from one-generator-per-factor; the two must be
  // mutually bounded over the realized range and vanish together
  std::vector<FactorElement> small;
  for (Factor f : {Factor::A, Factor::B})
    for (int x = 0; x < fp.factor(f).order(); ++x)
      if (x != fp.factor(f).identity()) {
        for (FactorElement g : symmetric_pair(fp, {f, x})) small.push_back(g);
        break;
      }
  std::vector<GeneratorAction> small_actions;
  for (const FactorElement& g : small) small_actions.push_back(build_action(model, g));
  const std::vector<int> alt_len = bfs_lengths(model, small_actions, id_state);
  report.two_length_controls = true;
  for (std::size_t s = 0; s < model.states(); ++s) {
    if (alt_len[s] < 0 || (alt_len[s] == 0) != (quotient_len[s] == 0))
      report.two_length_controls = false;
  }
  return report;
}

}  // namespace boxlab
