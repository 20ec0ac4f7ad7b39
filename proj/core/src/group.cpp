#include "boxlab/group.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace boxlab {

FiniteGroupTable::FiniteGroupTable(int order, std::vector<int> mul,
                                   std::vector<std::string> element_names)
    : order_(order), mul_(std::move(mul)), names_(std::move(element_names)) {
  if (order_ <= 0) throw std::invalid_argument("group order must be positive");
  if (mul_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("multiplication table size mismatch");
  for (int v : mul_)
    if (v < 0 || v >= order_) throw std::invalid_argument("table entry out of range");

  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x)
      ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw std::invalid_argument("no identity element");

  inv_.assign(order_, -1);
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y)
      if (this->mul(x, y) == identity_ && this->mul(y, x) == identity_) { inv_[x] = y; break; }
    if (inv_[x] < 0) throw std::invalid_argument("element without inverse");
  }

  if (names_.empty()) {
    names_.resize(order_);
    for (int x = 0; x < order_; ++x) names_[x] = "g" + std::to_string(x);
    names_[identity_] = "e";
  } else if (names_.size() != static_cast<std::size_t>(order_)) {
    throw std::invalid_argument("element_names size mismatch");
  }
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic order must be positive");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) mul[static_cast<std::size_t>(x) * n + y] = (x + y) % n;
  return FiniteGroupTable(n, std::move(mul));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& g,
                                                  const FiniteGroupTable& h) {
  const int n = g.order() * h.order();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  auto id = [&](int x, int y) { return x * h.order() + y; };
  for (int x1 = 0; x1 < g.order(); ++x1)
    for (int x2 = 0; x2 < h.order(); ++x2)
      for (int y1 = 0; y1 < g.order(); ++y1)
        for (int y2 = 0; y2 < h.order(); ++y2)
          mul[static_cast<std::size_t>(id(x1, x2)) * n + id(y1, y2)] =
              id(g.mul(x1, y1), h.mul(x2, y2));
  std::vector<std::string> names(n);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < h.order(); ++y)
      names[id(x, y)] = "(" + g.name(x) + "," + h.name(y) + ")";
  return FiniteGroupTable(n, std::move(mul), std::move(names));
}

FiniteGroupTable FiniteGroupTable::from_stream(std::istream& in) {
  std::string key;
  int n = 0;
  if (!(in >> key >> n) || key != "order")
    throw std::runtime_error("group table: expected 'order N'");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (auto& v : mul)
    if (!(in >> v)) throw std::runtime_error("group table: truncated table");
  int claimed_identity = 0;
  if (!(in >> key >> claimed_identity) || key != "identity")
    throw std::runtime_error("group table: expected 'identity i'");
  FiniteGroupTable g(n, std::move(mul));
  if (g.identity() != claimed_identity)
    throw std::runtime_error("group table: identity line disagrees with table");
  return g;
}

FiniteGroupTable FiniteGroupTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group table file: " + path);
  return from_stream(in);
}

void FiniteGroupTable::write(std::ostream& out) const {
  out << "order " << order_ << "\n";
  for (int x = 0; x < order_; ++x) {
    for (int y = 0; y < order_; ++y) out << (y ? " " : "") << mul(x, y);
    out << "\n";
  }
  out << "identity " << identity_ << "\n";
}

void FiniteGroupTable::validate(unsigned rng_seed) const {
  for (int x = 0; x < order_; ++x) {
    if (mul(identity_, x) != x || mul(x, identity_) != x)
      throw std::runtime_error("identity axiom fails at element " + std::to_string(x));
    if (mul(x, inv_[x]) != identity_)
      throw std::runtime_error("inverse axiom fails at element " + std::to_string(x));
  }
  auto assoc = [&](int x, int y, int z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      throw std::runtime_error("associativity fails at (" + std::to_string(x) + "," +
                               std::to_string(y) + "," + std::to_string(z) + ")");
  };
  if (order_ <= 64) {
    for (int x = 0; x < order_; ++x)
      for (int y = 0; y < order_; ++y)
        for (int z = 0; z < order_; ++z) assoc(x, y, z);
  } else {
    std::mt19937 rng(rng_seed);
    std::uniform_int_distribution<int> pick(0, order_ - 1);
    for (int i = 0; i < 100000; ++i) assoc(pick(rng), pick(rng), pick(rng));
  }
}

GeneratingSet::GeneratingSet(std::vector<FactorElement> gens, bool symmetric_closure,
                             const FiniteGroupTable& a, const FiniteGroupTable& b) {
  auto contains = [&](FactorElement g) {
    for (const auto& h : gens_)
      if (h == g) return true;
    return false;
  };
  for (const auto& g : gens) {
    const FiniteGroupTable& f = g.factor == Factor::A ? a : b;
    if (g.element <= -1 || g.element >= f.order())
      throw std::invalid_argument("generator element out of range");
    if (g.element == f.identity())
      throw std::invalid_argument("identity is not a generator");
    if (!contains(g)) gens_.push_back(g);
  }
  if (symmetric_closure) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const FiniteGroupTable& f = gens_[i].factor == Factor::A ? a : b;
      FactorElement inv{gens_[i].factor, f.inv(gens_[i].element)};
      if (!contains(inv)) gens_.push_back(inv);
    }
  } else {
    for (const auto& g : gens_) {
      const FiniteGroupTable& f = g.factor == Factor::A ? a : b;
      if (!contains({g.factor, f.inv(g.element)}))
        throw std::invalid_argument("generating set is not symmetric");
    }
  }
}

GeneratingSet GeneratingSet::full(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  std::vector<FactorElement> gens;
  for (int x = 0; x < a.order(); ++x)
    if (x != a.identity()) gens.push_back({Factor::A, x});
  for (int x = 0; x < b.order(); ++x)
    if (x != b.identity()) gens.push_back({Factor::B, x});
  return GeneratingSet(std::move(gens), false, a, b);
}

std::vector<int> cayley_word_lengths(const FiniteGroupTable& group,
                                     const std::vector<int>& gens) {
  std::vector<int> dist(group.order(), -1);
  std::queue<int> q;
  dist[group.identity()] = 0;
  q.push(group.identity());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int s : gens) {
      int y = group.mul(s, x);
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  std::string unreached;
  for (int x = 0; x < group.order(); ++x)
    if (dist[x] < 0) unreached += " " + group.name(x);
  if (!unreached.empty())
    throw std::runtime_error("not generating: unreached elements:" + unreached);
  return dist;
}

int cayley_word_length(const FiniteGroupTable& group, const std::vector<int>& gens, int x) {
  return cayley_word_lengths(group, gens)[x];
}

}  // namespace boxlab
