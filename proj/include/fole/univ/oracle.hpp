#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fole/fincat/cone.hpp"
#include "fole/fincat/constructions.hpp"
#include "fole/fincat/report.hpp"

namespace fole {

// Every cone (or cocone) over d, found by exhaustive search over vertices and legs.
inline std::vector<Cone<FinCategory>> all_cones(const Passage<FinCategory>& d, ConeKind kind) {
  const auto& c = d.target();
  const auto& shape = d.source();
  const auto& objs = shape.objects();
  std::vector<Cone<FinCategory>> out;
  for (const auto& v : c.objects()) {
    std::map<Id, Id> legs;
    auto rec = [&](auto&& self, std::size_t n) -> void {
      if (n == objs.size()) {
        Cone<FinCategory> cone{d, v, legs, kind};
        if (is_cone(cone)) out.push_back(std::move(cone));
        return;
      }
      const auto& homs = kind == ConeKind::Limit ? c.hom(v, d.object(objs[n])) : c.hom(d.object(objs[n]), v);
      for (const auto& m : homs) {
        legs[objs[n]] = m;
        self(self, n + 1);
      }
      legs.erase(objs[n]);
    };
    rec(rec, 0);
  }
  return out;
}

// Morphisms from the candidate's vertex to the universal vertex (limits), or back (colimits), that factor the legs.
inline std::vector<Id> factorizations(const Cone<FinCategory>& universal, const Cone<FinCategory>& candidate) {
  const auto& c = universal.category();
  const auto& homs = universal.kind == ConeKind::Limit ? c.hom(candidate.vertex, universal.vertex)
                                                       : c.hom(universal.vertex, candidate.vertex);
  std::vector<Id> out;
  for (const auto& m : homs)
    if (factors(universal, candidate, m)) out.push_back(m);
  return out;
}

inline bool is_universal(const Cone<FinCategory>& cone, const std::vector<Cone<FinCategory>>& cones) {
  for (const auto& other : cones)
    if (factorizations(cone, other).size() != 1) return false;
  return true;
}

inline bool is_universal(const Cone<FinCategory>& cone) {
  if (!is_cone(cone)) return false;
  return is_universal(cone, all_cones(cone.diagram, cone.kind));
}

// Exhaustive universal-cone search in a finite category.
inline LimitResult<FinCategory> oracle_universal(const Passage<FinCategory>& d, ConeKind kind) {
  auto cones = all_cones(d, kind);
  std::optional<Cone<FinCategory>> found;
  for (const auto& c : cones) {
    if (!is_universal(c, cones)) continue;
    if (!found) {
      found = c;
      continue;
    }
    // any two universal cones must be related by an isomorphism that factors both ways
    auto there = factorizations(*found, c);
    auto back = factorizations(c, *found);
    const auto& cat = d.target();
    bool iso = there.size() == 1 && back.size() == 1 &&
               cat.compose(there[0], back[0]) == cat.identity(kind == ConeKind::Limit ? c.vertex : found->vertex);
    if (!iso) fail(Errc::NoUniversalCone, "two universal cones are not isomorphic");
  }
  if (!found) fail(Errc::NoUniversalCone, "no universal cone exists");
  auto u = *found;
  return {u, [u](const Cone<FinCategory>& c) {
            require_cone(c);
            auto f = factorizations(u, c);
            if (f.empty()) fail(Errc::NoMediator, "candidate does not factor");
            if (f.size() > 1) fail(Errc::NonUniqueMediator, "candidate factors in several ways");
            return f.front();
          }};
}

// F sends a universal cone over d to a universal cone over d;F.
inline CheckReport check_continuity(const Passage<FinCategory>& f, const Passage<FinCategory>& d, ConeKind kind) {
  CheckReport rep;
  std::optional<LimitResult<FinCategory>> u;
  try {
    u = oracle_universal(d, kind);
  } catch (const Error& e) {
    rep.fail_with(std::string("source diagram has no universal cone: ") + e.what());
    return rep;
  }
  auto image = compose_passages(d, f);
  std::map<Id, Id> legs;
  for (const auto& [j, m] : u->cone.legs) legs[j] = f.morphism(m);
  Cone<FinCategory> mapped{image, f.object(u->vertex()), legs, kind};
  if (!is_universal(mapped)) rep.fail_with("image of the universal cone at '" + u->vertex() + "' is not universal");
  return rep;
}

// A diagram into a finite model, named by the model's identifiers.
template <Category E>
Passage<FinCategory> model_diagram(const FiniteModel<E>& m, const Passage<E>& d) {
  std::map<Id, Id> o, mm;
  for (const auto& [x, v] : d.object_map()) o[x] = m.object_id(v);
  for (const auto& [u, v] : d.morphism_map()) mm[u] = m.morphism_id(v);
  return Passage<FinCategory>(d.source(), m.category, o, mm);
}

// The restriction of a functor to finite models of its source and target.
template <Category E, Category E2>
Passage<FinCategory> model_passage(const FiniteModel<E>& a, const FiniteModel<E2>& b, const Functor<E, E2>& f) {
  std::map<Id, Id> o, m;
  for (const auto& [x, v] : a.objects) o[x] = b.object_id(f(v));
  for (const auto& [u, v] : a.morphisms) m[u] = b.morphism_id(f.map(v));
  return Passage<FinCategory>(a.category, b.category, o, m);
}

}  // namespace fole
