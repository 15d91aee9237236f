#pragma once

#include <set>
#include <string>
#include <utility>

#include "fole/fincat/set.hpp"

namespace fole {

// Classification of values Y by sorts X; incidence pairs are (value, sort).
struct TypeDomain {
  FinSet sorts, values;
  std::set<std::pair<Id, Id>> incidence;

  TypeDomain() = default;
  TypeDomain(FinSet x, FinSet y, std::set<std::pair<Id, Id>> inc)
      : sorts(std::move(x)), values(std::move(y)), incidence(std::move(inc)) {
    for (const auto& [v, s] : incidence)
      if (!values.contains(v) || !sorts.contains(s))
        fail(Errc::ValidationError, "incidence (" + v + "," + s + ") references an undeclared value or sort");
  }

  bool holds(const Id& value, const Id& sort) const { return incidence.count({value, sort}) > 0; }

  FinSet extent(const Id& sort) const {
    std::vector<Id> out;
    for (const auto& [v, s] : incidence)
      if (s == sort) out.push_back(v);
    return FinSet(std::move(out));
  }

  friend bool operator==(const TypeDomain&, const TypeDomain&) = default;
};

// <f,g>: A2 <-> A1 with f: X2 -> X1 on sorts and g: Y1 -> Y2 on values.
struct Infomorphism {
  TypeDomain source;  // A2
  TypeDomain target;  // A1
  SetFn sort_fn;      // f
  SetFn value_fn;     // g

  Infomorphism() = default;
  Infomorphism(TypeDomain a2, TypeDomain a1, SetFn f, SetFn g)
      : source(std::move(a2)), target(std::move(a1)), sort_fn(std::move(f)), value_fn(std::move(g)) {
    if (!(sort_fn.domain == source.sorts) || !(sort_fn.codomain == target.sorts))
      fail(Errc::InfomorphismViolation, "sort function must run from the source sorts to the target sorts");
    if (!(value_fn.domain == target.values) || !(value_fn.codomain == source.values))
      fail(Errc::InfomorphismViolation, "value function must run from the target values to the source values");
    for (const auto& y1 : target.values)
      for (const auto& x2 : source.sorts)
        if (target.holds(y1, sort_fn(x2)) != source.holds(value_fn(y1), x2))
          fail(Errc::InfomorphismViolation, "fundamental condition fails at value '" + y1 + "', sort '" + x2 + "'");
  }

  static Infomorphism identity(const TypeDomain& a) {
    return Infomorphism(a, a, SetFn::identity(a.sorts), SetFn::identity(a.values));
  }

  friend bool operator==(const Infomorphism&, const Infomorphism&) = default;
};

// first: A3 <-> A2, second: A2 <-> A1; result A3 <-> A1.
inline Infomorphism compose(const Infomorphism& first, const Infomorphism& second) {
  if (!(first.target == second.source)) fail(Errc::NonComposablePair, "infomorphisms do not compose");
  return Infomorphism(first.source, second.target, compose(first.sort_fn, second.sort_fn),
                      compose(second.value_fn, first.value_fn));
}

class ClsCat {
 public:
  using Object = TypeDomain;
  using Morphism = Infomorphism;
  Morphism identity(const Object& a) const { return Infomorphism::identity(a); }
  Morphism compose(const Morphism& f, const Morphism& g) const { return fole::compose(f, g); }
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }
  friend bool operator==(const ClsCat&, const ClsCat&) { return true; }
};

}  // namespace fole
