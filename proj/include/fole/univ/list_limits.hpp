#pragma once

#include "fole/diagrams/schema.hpp"
#include "fole/univ/set_limits.hpp"

namespace fole {

inline Functor<ListX, SetCat> sorted_arity_functor(const ListX& c) { return compose_functors(sorted_inclusion(c), arity_functor()); }

// Arity colimit in Set with the induced sort map, which must be well defined on every class.
inline LimitResult<ListX> colimit_in_listX(const Passage<ListX>& d) {
  const auto& xs = d.target().sorts();
  auto arity = colimit_in_set(apply_functor(d, sorted_arity_functor(d.target())));
  std::map<Id, Id> sort;
  for (const auto& [j, leg] : arity.cone.legs)
    for (const auto& i : leg.domain) {
      auto [it, fresh] = sort.emplace(leg(i), d.object(j).sort_of(i));
      if (!fresh && it->second != d.object(j).sort_of(i))
        fail(Errc::SortGluingConflict, "class '" + leg(i) + "' receives sorts '" + it->second + "' and '" + d.object(j).sort_of(i) + "'");
    }
  Signature vertex(arity.vertex(), std::move(sort), xs);
  std::map<Id, SignatureMorphism> legs;
  for (const auto& [j, leg] : arity.cone.legs) legs.emplace(j, SignatureMorphism::sorted(d.object(j), vertex, leg.map));
  Cone<ListX> cone{d, vertex, legs, ConeKind::Colimit};
  auto set_med = arity.mediator;
  auto mediator = [d, vertex, set_med](const Cone<ListX>& c) {
    require_cone(c);
    std::map<Id, SetFn> ls;
    for (const auto& [j, m] : c.legs) ls.emplace(j, m.arity_map);
    auto h = set_med(Cone<SetCat>{apply_functor(d, sorted_arity_functor(d.target())), c.vertex.arity, ls, ConeKind::Colimit});
    return SignatureMorphism::sorted(vertex, c.vertex, h.map);
  };
  return {std::move(cone), mediator};
}

// Families of indices with one common sort; the empty diagram gives X with identity sorts.
inline LimitResult<ListX> limit_in_listX(const Passage<ListX>& d) {
  const auto& xs = d.target().sorts();
  const auto& objs = d.source().objects();
  if (objs.empty()) {
    std::map<Id, Id> sort;
    for (const auto& x : xs) sort[x] = x;
    Signature vertex(xs, std::move(sort), xs);
    Cone<ListX> cone{d, vertex, {}, ConeKind::Limit};
    return {std::move(cone), [vertex](const Cone<ListX>& c) {
              require_cone(c);
              return SignatureMorphism::sorted(c.vertex, vertex, c.vertex.sort);
            }};
  }
  auto arity_d = apply_functor(d, sorted_arity_functor(d.target()));
  auto arity = limit_in_set(arity_d);
  std::vector<Id> keep;
  std::map<Id, Id> sort;
  for (const auto& e : arity.vertex()) {
    const auto& s = d.object(objs.front()).sort_of(arity.cone.leg(objs.front())(e));
    bool same = true;
    for (const auto& j : objs)
      if (d.object(j).sort_of(arity.cone.leg(j)(e)) != s) same = false;
    if (same) {
      keep.push_back(e);
      sort[e] = s;
    }
  }
  Signature vertex(FinSet(keep), std::move(sort), xs);
  std::map<Id, SignatureMorphism> legs;
  for (const auto& j : objs) {
    std::map<Id, Id> m;
    for (const auto& e : keep) m[e] = arity.cone.leg(j)(e);
    legs.emplace(j, SignatureMorphism::sorted(vertex, d.object(j), std::move(m)));
  }
  Cone<ListX> cone{d, vertex, legs, ConeKind::Limit};
  auto set_med = arity.mediator;
  auto mediator = [arity_d, vertex, set_med](const Cone<ListX>& c) {
    require_cone(c);
    std::map<Id, SetFn> ls;
    for (const auto& [j, m] : c.legs) ls.emplace(j, m.arity_map);
    auto h = set_med(Cone<SetCat>{arity_d, c.vertex.arity, ls, ConeKind::Limit});
    for (const auto& [v, e] : h.map)
      if (!vertex.arity.contains(e)) fail(Errc::NoMediator, "family of '" + v + "' mixes sorts");
    return SignatureMorphism::sorted(c.vertex, vertex, h.map);
  };
  return {std::move(cone), mediator};
}

// General signatures: arity and sort sets glued separately in Set, with the induced sort map.
inline LimitResult<ListCat> colimit_in_list(const Passage<ListCat>& d) {
  auto arity = colimit_in_set(apply_functor(d, arity_functor()));
  auto sorts = colimit_in_set(apply_functor(d, sort_functor()));
  std::map<Id, Id> sort;
  for (const auto& [j, leg] : arity.cone.legs)
    for (const auto& i : leg.domain) {
      const auto& x = sorts.cone.leg(j)(d.object(j).sort_of(i));
      auto [it, fresh] = sort.emplace(leg(i), x);
      if (!fresh && it->second != x) fail(Errc::SortGluingConflict, "class '" + leg(i) + "' receives two sort classes");
    }
  Signature vertex(arity.vertex(), std::move(sort), sorts.vertex());
  std::map<Id, SignatureMorphism> legs;
  for (const auto& j : d.source().objects())
    legs.emplace(j, SignatureMorphism(d.object(j), vertex, arity.cone.leg(j), sorts.cone.leg(j)));
  Cone<ListCat> cone{d, vertex, legs, ConeKind::Colimit};
  auto am = arity.mediator;
  auto sm = sorts.mediator;
  auto mediator = [d, vertex, am, sm](const Cone<ListCat>& c) {
    require_cone(c);
    std::map<Id, SetFn> la, ls;
    for (const auto& [j, m] : c.legs) {
      la.emplace(j, m.arity_map);
      ls.emplace(j, m.sort_map);
    }
    auto h = am(Cone<SetCat>{apply_functor(d, arity_functor()), c.vertex.arity, la, ConeKind::Colimit});
    auto f = sm(Cone<SetCat>{apply_functor(d, sort_functor()), c.vertex.sorts, ls, ConeKind::Colimit});
    return SignatureMorphism(vertex, c.vertex, h, f);
  };
  return {std::move(cone), mediator};
}

}  // namespace fole
