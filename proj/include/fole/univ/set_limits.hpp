#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "fole/fincat/cone.hpp"
#include "fole/fincat/set.hpp"

namespace fole {

// Elements of the limit are compatible families, named by tuple_id of their components in shape-object order.
inline LimitResult<SetCat> limit_in_set(const Passage<SetCat>& d) {
  const auto& shape = d.source();
  const auto& objs = shape.objects();
  std::vector<std::vector<const MorphismDecl*>> checks(objs.size());
  for (const auto& u : shape.morphisms()) {
    if (shape.is_identity(u.id)) continue;
    auto a = shape.object_index(u.source), b = shape.object_index(u.target);
    checks[std::max(a, b)].push_back(&u);
  }
  std::vector<Id> pick(objs.size());
  std::vector<Id> elems;
  std::map<Id, std::map<Id, Id>> legs;
  auto rec = [&](auto&& self, std::size_t n) -> void {
    if (n == objs.size()) {
      Id e = tuple_id(pick);
      elems.push_back(e);
      for (std::size_t j = 0; j < objs.size(); ++j) legs[objs[j]][e] = pick[j];
      return;
    }
    for (const auto& x : d.object(objs[n])) {
      pick[n] = x;
      bool ok = true;
      for (const auto* u : checks[n])
        if (d.morphism(u->id)(pick[shape.object_index(u->source)]) != pick[shape.object_index(u->target)]) {
          ok = false;
          break;
        }
      if (ok) self(self, n + 1);
    }
  };
  rec(rec, 0);
  FinSet vertex(elems);
  std::map<Id, SetFn> cone_legs;
  for (const auto& j : objs) cone_legs.emplace(j, SetFn(vertex, d.object(j), legs[j]));
  Cone<SetCat> cone{d, vertex, std::move(cone_legs), ConeKind::Limit};
  auto mediator = [d, vertex, objs](const Cone<SetCat>& c) {
    require_cone(c);
    std::map<Id, Id> m;
    for (const auto& v : c.vertex) {
      std::vector<Id> parts;
      for (const auto& j : objs) parts.push_back(c.leg(j)(v));
      Id e = tuple_id(parts);
      if (!vertex.contains(e)) fail(Errc::NoMediator, "candidate family is not compatible");
      m[v] = e;
    }
    return SetFn(c.vertex, vertex, std::move(m));
  };
  return {std::move(cone), mediator};
}

// Disjoint union quotiented by the relation generated by the diagram arrows; each class is named by its least member.
inline LimitResult<SetCat> colimit_in_set(const Passage<SetCat>& d) {
  const auto& shape = d.source();
  std::vector<Id> all;
  std::map<Id, std::size_t> index;
  for (const auto& j : shape.objects())
    for (const auto& x : d.object(j)) {
      index[pair_id(j, x)] = all.size();
      all.push_back(pair_id(j, x));
    }
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& u : shape.morphisms()) {
    if (shape.is_identity(u.id)) continue;
    const auto& f = d.morphism(u.id);
    for (const auto& x : f.domain) {
      auto a = find(index.at(pair_id(u.source, x))), b = find(index.at(pair_id(u.target, f(x))));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, Id> least;
  for (std::size_t n = 0; n < all.size(); ++n) {
    auto r = find(n);
    auto it = least.find(r);
    if (it == least.end() || all[n] < it->second) least[r] = all[n];
  }
  std::vector<Id> classes;
  for (const auto& [r, e] : least) classes.push_back(e);
  FinSet vertex(classes);
  std::map<Id, SetFn> legs;
  for (const auto& j : shape.objects()) {
    std::map<Id, Id> m;
    for (const auto& x : d.object(j)) m[x] = least.at(find(index.at(pair_id(j, x))));
    legs.emplace(j, SetFn(d.object(j), vertex, std::move(m)));
  }
  Cone<SetCat> cone{d, vertex, legs, ConeKind::Colimit};
  auto mediator = [d, vertex, legs](const Cone<SetCat>& c) {
    require_cone(c);
    std::map<Id, Id> m;
    for (const auto& [j, leg] : legs)
      for (const auto& x : leg.domain) {
        const auto& cls = leg(x);
        const auto& y = c.leg(j)(x);
        auto [it, fresh] = m.emplace(cls, y);
        if (!fresh && it->second != y) fail(Errc::NoMediator, "cocone is not constant on a class");
      }
    return SetFn(vertex, c.vertex, std::move(m));
  };
  return {std::move(cone), mediator};
}

}  // namespace fole
