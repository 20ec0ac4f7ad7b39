#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxlab {

/// A finite group given by its full multiplication table.
///
/// Element 0..order-1, mul(x,y) = index of x*y. Identity/inverse tables are
/// derived on construction; validate() checks the axioms (exhaustively for
/// order <= 64, randomized triples above).
class FiniteGroupTable {
 public:
  FiniteGroupTable(int order, std::vector<int> mul,
                   std::vector<std::string> element_names = {});

  static FiniteGroupTable cyclic(int n);
  static FiniteGroupTable direct_product(const FiniteGroupTable& g,
                                         const FiniteGroupTable& h);
  /// Plain-text format: `order N`, N rows of N indices, `identity i`.
  static FiniteGroupTable from_stream(std::istream& in);
  static FiniteGroupTable from_file(const std::string& path);

  int order() const { return order_; }
  int mul(int x, int y) const { return mul_[static_cast<std::size_t>(x) * order_ + y]; }
  int identity() const { return identity_; }
  int inv(int x) const { return inv_[x]; }
  const std::string& name(int x) const { return names_[x]; }

  /// Throws std::runtime_error with a description on the first axiom failure.
  void validate(unsigned rng_seed = 1) const;

  void write(std::ostream& out) const;

 private:
  int order_;
  std::vector<int> mul_;
  int identity_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

enum class Factor : std::uint8_t { A = 0, B = 1 };

inline Factor other(Factor f) { return f == Factor::A ? Factor::B : Factor::A; }

/// A generator of a free-product word metric: element of one factor.
struct FactorElement {
  Factor factor;
  int element;

  friend bool operator==(const FactorElement&, const FactorElement&) = default;
};

/// Symmetric (under factor-wise inversion) list of factor elements.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  /// With symmetric_closure, missing inverses are added.
  GeneratingSet(std::vector<FactorElement> gens, bool symmetric_closure,
                const FiniteGroupTable& a, const FiniteGroupTable& b);

  /// All non-identity elements of both factors.
  static GeneratingSet full(const FiniteGroupTable& a, const FiniteGroupTable& b);

  const std::vector<FactorElement>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

 private:
  std::vector<FactorElement> gens_;
};

/// BFS word length of x in Cay(group, gens) where gens is a symmetric list of
/// group elements. Throws if gens do not generate (message lists unreached
/// elements).
int cayley_word_length(const FiniteGroupTable& group, const std::vector<int>& gens, int x);

/// All BFS word lengths at once (same generation check).
std::vector<int> cayley_word_lengths(const FiniteGroupTable& group,
                                     const std::vector<int>& gens);

}  // namespace boxlab
