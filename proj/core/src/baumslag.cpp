#include "boxlab/baumslag.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace boxlab {

int TruncatedWordSet::index_of(const NormalFormWord& w) const {
  auto it = index.find(w);
  if (it == index.end()) throw std::out_of_range("word not in truncated set");
  return it->second;
}

TruncatedWordSet build_truncated_words(const FreeProduct& fp, int k, std::size_t cap) {
  if (k < 0) throw std::invalid_argument("truncation depth must be >= 0");
  TruncatedWordSet set;
  set.k = k;
  set.words.push_back({});
  set.index.emplace(NormalFormWord{}, 0);

  // layer-by-layer: V(l) = words of syllable length exactly l
  std::size_t layer_begin = 0;
  for (int l = 1; l <= k; ++l) {
    const std::size_t layer_end = set.words.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Factor f : {Factor::A, Factor::B}) {
        const NormalFormWord w = set.words[i];  // copy: push_back may reallocate
        if (!w.empty() && w.syllables.front().factor == f) continue;
        const FiniteGroupTable& fac = fp.factor(f);
        for (int g = 0; g < fac.order(); ++g) {
          if (g == fac.identity()) continue;
          // prepend: new leftmost syllable (words read g_l ... g_1)
          NormalFormWord nw;
          nw.syllables.reserve(w.length() + 1);
          nw.syllables.push_back({f, g});
          nw.syllables.insert(nw.syllables.end(), w.syllables.begin(), w.syllables.end());
          if (set.words.size() >= cap)
            throw std::runtime_error("too large: truncated word set exceeds cap");
          set.index.emplace(nw, static_cast<int>(set.words.size()));
          set.words.push_back(std::move(nw));
        }
      }
    }
    layer_begin = layer_end;
  }
  return set;
}

PermutationRep sigma(const FreeProduct& fp, int k, std::size_t cap) {
  if (k < 1) throw std::invalid_argument("sigma requires k >= 1");
  const TruncatedWordSet u = build_truncated_words(fp, k, cap);
  PermutationRep rep;
  rep.k = k;
  rep.degree = u.size();
  rep.perms.resize(2);
  for (Factor f : {Factor::A, Factor::B}) {
    const FiniteGroupTable& fac = fp.factor(f);
    auto& per_element = rep.perms[static_cast<int>(f)];
    per_element.assign(fac.order(), std::vector<int>(u.size()));
    for (int g = 0; g < fac.order(); ++g) {
      for (int i = 0; i < u.size(); ++i) {
        const NormalFormWord gw = fp.multiply(fp.word_of(f, g), u.words[i]);
        auto it = u.index.find(gw);
        per_element[g][i] = (it == u.index.end()) ? i : it->second;
      }
    }
    for (int g = 0; g < fac.order(); ++g) {
      std::vector<bool> hit(u.size(), false);
      for (int img : per_element[g]) {
        if (hit[img]) throw std::logic_error("sigma image is not a bijection");
        hit[img] = true;
      }
    }
  }
  return rep;
}

int apply_word(const PermutationRep& rep, const NormalFormWord& w, int point) {
  // left action: rightmost syllable acts first
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    point = rep.perm(it->factor, it->element)[point];
  return point;
}

std::optional<std::uint64_t> quotient_order(const PermutationRep& rep, std::size_t cap) {
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
      std::size_t h = 0xcbf29ce484222325ull;
      for (int x : v) {
        h ^= static_cast<std::size_t>(x);
        h *= 0x100000001b3ull;
      }
      return h;
    }
  };
  std::vector<std::vector<int>> gens;
  for (const auto& factor_perms : rep.perms)
    for (const auto& p : factor_perms) gens.push_back(p);

  std::vector<int> id(rep.degree);
  for (int i = 0; i < rep.degree; ++i) id[i] = i;
  std::unordered_set<std::vector<int>, VecHash> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<int> gp(rep.degree);
        for (int i = 0; i < rep.degree; ++i) gp[i] = g[p[i]];
        if (seen.insert(gp).second) {
          if (seen.size() > cap) return std::nullopt;
          next.push_back(std::move(gp));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

FaithfulnessReport faithfulness_report(const FreeProduct& fp, int k, int L,
                                       std::size_t cap) {
  const PermutationRep rep = sigma(fp, k, cap);
  const TruncatedWordSet uk = build_truncated_words(fp, k, cap);
  const TruncatedWordSet ul = build_truncated_words(fp, L, cap);
  FaithfulnessReport report;
  report.k = k;
  report.checked_depth = L;
  for (const NormalFormWord& g : ul.words) {
    ++report.words_checked;
    const int image = apply_word(rep, g, 0);
    auto it = uk.index.find(g);
    const bool ok = it != uk.index.end() && image == it->second;
    if (!ok) report.failures.push_back(g);
  }
  return report;
}

LabeledMultigraph schreier_graph(const FreeProduct& fp, const PermutationRep& rep,
                                 const GeneratingSet& s) {
  std::vector<std::vector<int>> action;
  std::vector<int> inverse_of;
  const auto& gens = s.generators();
  for (const FactorElement& g : gens) {
    action.push_back(rep.perm(g.factor, g.element));
    const FiniteGroupTable& fac = fp.factor(g.factor);
    const FactorElement gi{g.factor, fac.inv(g.element)};
    int idx = -1;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (gens[j] == gi) { idx = static_cast<int>(j); break; }
    if (idx < 0) throw std::invalid_argument("generating set not symmetric");
    inverse_of.push_back(idx);
  }
  return schreier_multigraph(rep.degree, action, inverse_of);
}

}  // namespace boxlab
