#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "boxlab/free_product.hpp"
#include "boxlab/graph.hpp"

namespace boxlab {

/// U(k): all reduced words of syllable length <= k, indexed with e at 0.
struct TruncatedWordSet {
  int k = 0;
  std::vector<NormalFormWord> words;
  std::unordered_map<NormalFormWord, int, NormalFormWordHash> index;

  int size() const { return static_cast<int>(words.size()); }
  int index_of(const NormalFormWord& w) const;
};

inline constexpr std::size_t kDefaultWordCap = 1000000;

TruncatedWordSet build_truncated_words(const FreeProduct& fp, int k,
                                       std::size_t cap = kDefaultWordCap);

/// The permutation action of both factors on U(k): g.w is the reduction of
/// the left product when it stays within length k, otherwise w is fixed.
struct PermutationRep {
  int k = 0;
  int degree = 0;
  /// perm[factor][g] is the image array over word indices.
  std::vector<std::vector<std::vector<int>>> perms;

  const std::vector<int>& perm(Factor f, int g) const {
    return perms[static_cast<int>(f)][g];
  }
};

PermutationRep sigma(const FreeProduct& fp, int k, std::size_t cap = kDefaultWordCap);

/// Apply a reduced word through the rep (left action, rightmost syllable
/// first).
int apply_word(const PermutationRep& rep, const NormalFormWord& w, int point);

/// Order of the permutation group generated by all factor images, by breadth
/// first closure. nullopt once the closure exceeds `cap` elements.
std::optional<std::uint64_t> quotient_order(const PermutationRep& rep,
                                            std::size_t cap = 2000000);

struct FaithfulnessReport {
  int k = 0;
  int checked_depth = 0;
  std::size_t words_checked = 0;
  std::vector<NormalFormWord> failures;  // words with sigma(k)(g)(e) != g

  bool all_pass() const { return failures.empty(); }
};

/// Checks sigma(k)(g)(e) = g for every reduced word of syllable length <= L.
FaithfulnessReport faithfulness_report(const FreeProduct& fp, int k, int L,
                                       std::size_t cap = kDefaultWordCap);

/// Schreier graph of the rep for the generators S (factor elements).
LabeledMultigraph schreier_graph(const FreeProduct& fp, const PermutationRep& rep,
                                 const GeneratingSet& s);

}  // namespace boxlab
