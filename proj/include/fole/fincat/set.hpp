#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "fole/fincat/category.hpp"

namespace fole {

// Sorted, duplicate-free list of element identifiers.
class FinSet {
 public:
  FinSet() = default;
  FinSet(std::initializer_list<Id> xs) : FinSet(std::vector<Id>(xs)) {}
  explicit FinSet(std::vector<Id> xs) : elems_(std::move(xs)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  const std::vector<Id>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  bool contains(const Id& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Id> elems_;
};

struct SetFn {
  FinSet domain, codomain;
  std::map<Id, Id> map;

  SetFn() = default;
  SetFn(FinSet dom, FinSet cod, std::map<Id, Id> m) : domain(std::move(dom)), codomain(std::move(cod)), map(std::move(m)) {
    if (map.size() != domain.size()) fail(Errc::InvalidFunction, "function is not total on its domain");
    for (const auto& [x, y] : map) {
      if (!domain.contains(x)) fail(Errc::InvalidFunction, "'" + x + "' is not in the domain");
      if (!codomain.contains(y)) fail(Errc::InvalidFunction, "'" + y + "' is not in the codomain");
    }
  }

  static SetFn identity(const FinSet& s) {
    std::map<Id, Id> m;
    for (const auto& x : s) m[x] = x;
    return SetFn(s, s, std::move(m));
  }

  const Id& operator()(const Id& x) const { return lookup(map, x, "function"); }

  friend bool operator==(const SetFn&, const SetFn&) = default;
};

// f then g.
inline SetFn compose(const SetFn& f, const SetFn& g) {
  if (!(f.codomain == g.domain)) fail(Errc::NonComposablePair, "functions do not compose");
  std::map<Id, Id> m;
  for (const auto& [x, y] : f.map) m[x] = g(y);
  return SetFn(f.domain, g.codomain, std::move(m));
}

inline bool is_bijection(const SetFn& f) {
  if (f.domain.size() != f.codomain.size()) return false;
  std::vector<Id> img;
  for (const auto& [x, y] : f.map) img.push_back(y);
  return FinSet(img).size() == f.codomain.size();
}

inline SetFn inverse(const SetFn& f) {
  if (!is_bijection(f)) fail(Errc::InvalidFunction, "inverse of a non-bijection");
  std::map<Id, Id> m;
  for (const auto& [x, y] : f.map) m[y] = x;
  return SetFn(f.codomain, f.domain, std::move(m));
}

class SetCat {
 public:
  using Object = FinSet;
  using Morphism = SetFn;
  Morphism identity(const Object& x) const { return SetFn::identity(x); }
  Morphism compose(const Morphism& f, const Morphism& g) const { return fole::compose(f, g); }
  const Object& source(const Morphism& f) const { return f.domain; }
  const Object& target(const Morphism& f) const { return f.codomain; }
  friend bool operator==(const SetCat&, const SetCat&) { return true; }
};

// Calls visit on every function dom -> cod in lexicographic order of value choices.
template <class Visit>
void for_each_function(const FinSet& dom, const FinSet& cod, Visit&& visit) {
  const auto& xs = dom.elements();
  const auto& ys = cod.elements();
  if (!xs.empty() && ys.empty()) return;
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    std::map<Id, Id> m;
    for (std::size_t n = 0; n < xs.size(); ++n) m[xs[n]] = ys[idx[n]];
    visit(SetFn(dom, cod, std::move(m)));
    std::size_t n = 0;
    while (n < idx.size() && ++idx[n] == ys.size()) idx[n++] = 0;
    if (n == idx.size()) return;
  }
}

inline std::vector<SetFn> all_functions(const FinSet& dom, const FinSet& cod) {
  std::vector<SetFn> out;
  for_each_function(dom, cod, [&](SetFn f) { out.push_back(std::move(f)); });
  return out;
}

}  // namespace fole
