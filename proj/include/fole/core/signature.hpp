#pragma once

#include <map>
#include <string>
#include <vector>

#include "fole/fincat/set.hpp"

namespace fole {

// Arity I with sort assignment s: I -> X.
struct Signature {
  FinSet arity;
  std::map<Id, Id> sort;
  FinSet sorts;

  Signature() = default;
  Signature(FinSet i, std::map<Id, Id> s, FinSet x) : arity(std::move(i)), sort(std::move(s)), sorts(std::move(x)) {
    if (sort.size() != arity.size()) fail(Errc::SortConditionViolation, "sort map is not total on the arity");
    for (const auto& [i_, x_] : sort) {
      if (!arity.contains(i_)) fail(Errc::SortConditionViolation, "sorted index '" + i_ + "' is not in the arity");
      if (!sorts.contains(x_)) fail(Errc::SortConditionViolation, "sort '" + x_ + "' of '" + i_ + "' is not declared");
    }
  }

  static Signature of(const std::vector<std::pair<Id, Id>>& columns, FinSet x) {
    std::vector<Id> i;
    std::map<Id, Id> s;
    for (const auto& [c, t] : columns) {
      i.push_back(c);
      s[c] = t;
    }
    return Signature(FinSet(i), s, std::move(x));
  }

  const Id& sort_of(const Id& i) const { return lookup(sort, i, "sort map"); }
  SetFn sort_fn() const { return SetFn(arity, sorts, sort); }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// <h,f>: S2 -> S1 with h: I2 -> I1, f: X2 -> X1 and s2;f = h;s1.
struct SignatureMorphism {
  Signature source, target;
  SetFn arity_map, sort_map;

  SignatureMorphism() = default;
  SignatureMorphism(Signature s2, Signature s1, SetFn h, SetFn f)
      : source(std::move(s2)), target(std::move(s1)), arity_map(std::move(h)), sort_map(std::move(f)) {
    if (!(arity_map.domain == source.arity) || !(arity_map.codomain == target.arity))
      fail(Errc::SortConditionViolation, "arity map endpoints do not match the signatures");
    if (!(sort_map.domain == source.sorts) || !(sort_map.codomain == target.sorts))
      fail(Errc::SortConditionViolation, "sort map endpoints do not match the signatures");
    for (const auto& i : source.arity)
      if (sort_map(source.sort_of(i)) != target.sort_of(arity_map(i)))
        fail(Errc::SortConditionViolation, "index '" + i + "' changes sort under the morphism");
  }

  // X-sorted morphism (identity on sorts).
  static SignatureMorphism sorted(const Signature& s2, const Signature& s1, std::map<Id, Id> h) {
    return SignatureMorphism(s2, s1, SetFn(s2.arity, s1.arity, std::move(h)), SetFn::identity(s2.sorts));
  }

  static SignatureMorphism identity(const Signature& s) {
    return SignatureMorphism(s, s, SetFn::identity(s.arity), SetFn::identity(s.sorts));
  }

  const Id& operator()(const Id& i) const { return arity_map(i); }

  friend bool operator==(const SignatureMorphism&, const SignatureMorphism&) = default;
};

inline SignatureMorphism compose(const SignatureMorphism& a, const SignatureMorphism& b) {
  if (!(a.target == b.source)) fail(Errc::NonComposablePair, "signature morphisms do not compose");
  return SignatureMorphism(a.source, b.target, compose(a.arity_map, b.arity_map), compose(a.sort_map, b.sort_map));
}

// X-sorted signatures and sort-preserving index maps.
class ListX {
 public:
  using Object = Signature;
  using Morphism = SignatureMorphism;

  ListX() = default;
  explicit ListX(FinSet x) : sorts_(std::move(x)) {}

  const FinSet& sorts() const { return sorts_; }
  bool contains(const Signature& s) const { return s.sorts == sorts_; }
  bool contains(const SignatureMorphism& m) const {
    return contains(m.source) && contains(m.target) && m.sort_map == SetFn::identity(sorts_);
  }

  Morphism identity(const Object& s) const { return SignatureMorphism::identity(s); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return fole::compose(a, b); }
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }

  friend bool operator==(const ListX&, const ListX&) = default;

 private:
  FinSet sorts_;
};

// Signatures over varying sort sets.
class ListCat {
 public:
  using Object = Signature;
  using Morphism = SignatureMorphism;
  Morphism identity(const Object& s) const { return SignatureMorphism::identity(s); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return fole::compose(a, b); }
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }
  friend bool operator==(const ListCat&, const ListCat&) { return true; }
};

// All X-sorted morphisms s2 -> s1.
template <class Visit>
void for_each_sorted_morphism(const Signature& s2, const Signature& s1, Visit&& visit) {
  const auto& is = s2.arity.elements();
  std::vector<std::vector<Id>> choices;
  for (const auto& i : is) {
    std::vector<Id> c;
    for (const auto& j : s1.arity)
      if (s1.sort_of(j) == s2.sort_of(i)) c.push_back(j);
    if (c.empty()) return;
    choices.push_back(std::move(c));
  }
  std::vector<std::size_t> idx(is.size(), 0);
  SetFn ident = SetFn::identity(s2.sorts);
  while (true) {
    std::map<Id, Id> h;
    for (std::size_t n = 0; n < is.size(); ++n) h[is[n]] = choices[n][idx[n]];
    visit(SignatureMorphism(s2, s1, SetFn(s2.arity, s1.arity, std::move(h)), ident));
    std::size_t n = 0;
    while (n < idx.size() && ++idx[n] == choices[n].size()) idx[n++] = 0;
    if (n == idx.size()) return;
  }
}

inline std::vector<SignatureMorphism> sorted_morphisms(const Signature& s2, const Signature& s1) {
  std::vector<SignatureMorphism> out;
  for_each_sorted_morphism(s2, s1, [&](SignatureMorphism m) { out.push_back(std::move(m)); });
  return out;
}

}  // namespace fole
