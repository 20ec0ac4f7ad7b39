#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxlab/group.hpp"

namespace boxlab {

/// One letter of a reduced word: a non-identity element of one factor.
struct Syllable {
  Factor factor;
  int element;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Reduced alternating-syllable word in A * B. Empty word is the identity.
struct NormalFormWord {
  std::vector<Syllable> syllables;

  std::size_t length() const { return syllables.size(); }
  bool empty() const { return syllables.empty(); }

  friend bool operator==(const NormalFormWord&, const NormalFormWord&) = default;
};

struct NormalFormWordHash {
  std::size_t operator()(const NormalFormWord& w) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const Syllable& s : w.syllables) {
      h ^= static_cast<std::size_t>(s.element) * 2 + static_cast<std::size_t>(s.factor);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// The free product A * B of two finite factor groups, with word arithmetic
/// on canonical reduced forms.
class FreeProduct {
 public:
  FreeProduct(FiniteGroupTable a, FiniteGroupTable b)
      : a_(std::move(a)), b_(std::move(b)) {}

  const FiniteGroupTable& factor(Factor f) const { return f == Factor::A ? a_ : b_; }
  const FiniteGroupTable& a() const { return a_; }
  const FiniteGroupTable& b() const { return b_; }

  /// Reduce an arbitrary syllable list (merging adjacent same-factor
  /// syllables, dropping identities). Throws on out-of-range element indices.
  NormalFormWord reduce(const std::vector<Syllable>& raw) const;

  NormalFormWord multiply(const NormalFormWord& w1, const NormalFormWord& w2) const;
  NormalFormWord inverse(const NormalFormWord& w) const;
  NormalFormWord multiply(std::initializer_list<NormalFormWord> ws) const;

  NormalFormWord word_of(Factor f, int element) const;
  NormalFormWord commutator(int a_elem, int b_elem) const;

  /// Image under G -> A x B (componentwise product of the A- and B-syllables).
  std::pair<int, int> project_to_direct_product(const NormalFormWord& w) const;

  std::string format(const NormalFormWord& w) const;

 private:
  FiniteGroupTable a_;
  FiniteGroupTable b_;
};

/// Injectivity of `image` on E; on failure the colliding pair is returned.
struct InjectivityResult {
  bool injective = true;
  std::optional<std::pair<NormalFormWord, NormalFormWord>> collision;
};

InjectivityResult check_injective_on(
    const std::vector<NormalFormWord>& words,
    const std::function<std::size_t(const NormalFormWord&)>& image);

}  // namespace boxlab
