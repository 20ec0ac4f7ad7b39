#include "boxlab/free_product.hpp"

#include <stdexcept>
#include <unordered_map>

namespace boxlab {

NormalFormWord FreeProduct::reduce(const std::vector<Syllable>& raw) const {
  NormalFormWord out;
  for (const Syllable& s : raw) {
    const FiniteGroupTable& f = factor(s.factor);
    if (s.element < 0 || s.element >= f.order())
      throw std::invalid_argument("syllable element index out of range");
    if (s.element == f.identity()) continue;
    if (!out.syllables.empty() && out.syllables.back().factor == s.factor) {
      int merged = f.mul(out.syllables.back().element, s.element);
      out.syllables.pop_back();
      if (merged != f.identity()) {
        out.syllables.push_back({s.factor, merged});
      }
      // a cancellation can expose a new same-factor adjacency: nothing to do,
      // the invariant "out is reduced" is restored before the next append
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

NormalFormWord FreeProduct::multiply(const NormalFormWord& w1,
                                     const NormalFormWord& w2) const {
  // w1 is reduced, so only the junction can cascade
  NormalFormWord out = w1;
  for (const Syllable& s : w2.syllables) {
    if (!out.syllables.empty() && out.syllables.back().factor == s.factor) {
      const FiniteGroupTable& f = factor(s.factor);
      int merged = f.mul(out.syllables.back().element, s.element);
      out.syllables.pop_back();
      if (merged != f.identity()) out.syllables.push_back({s.factor, merged});
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

NormalFormWord FreeProduct::multiply(std::initializer_list<NormalFormWord> ws) const {
  NormalFormWord out;
  for (const NormalFormWord& w : ws) out = multiply(out, w);
  return out;
}

NormalFormWord FreeProduct::inverse(const NormalFormWord& w) const {
  NormalFormWord out;
  out.syllables.reserve(w.syllables.size());
  for (auto it = w.syllables.rbegin(); it != w.syllables.rend(); ++it)
    out.syllables.push_back({it->factor, factor(it->factor).inv(it->element)});
  return out;
}

NormalFormWord FreeProduct::word_of(Factor f, int element) const {
  return reduce({Syllable{f, element}});
}

NormalFormWord FreeProduct::commutator(int a_elem, int b_elem) const {
  return reduce({{Factor::A, a_elem},
                 {Factor::B, b_elem},
                 {Factor::A, a_.inv(a_elem)},
                 {Factor::B, b_.inv(b_elem)}});
}

std::pair<int, int> FreeProduct::project_to_direct_product(const NormalFormWord& w) const {
  int pa = a_.identity();
  int pb = b_.identity();
  for (const Syllable& s : w.syllables) {
    if (s.factor == Factor::A)
      pa = a_.mul(pa, s.element);
    else
      pb = b_.mul(pb, s.element);
  }
  return {pa, pb};
}

std::string FreeProduct::format(const NormalFormWord& w) const {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables) {
    if (!out.empty()) out += ".";
    out += (s.factor == Factor::A ? "A:" : "B:");
    out += factor(s.factor).name(s.element);
  }
  return out;
}

InjectivityResult check_injective_on(
    const std::vector<NormalFormWord>& words,
    const std::function<std::size_t(const NormalFormWord&)>& image) {
  std::unordered_map<std::size_t, NormalFormWord> seen;
  for (const NormalFormWord& w : words) {
    auto [it, inserted] = seen.try_emplace(image(w), w);
    if (!inserted && !(it->second == w)) {
      return {false, std::make_pair(it->second, w)};
    }
  }
  return {};
}

}  // namespace boxlab
