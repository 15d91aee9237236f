#pragma once

#include <functional>
#include <map>

#include "fole/fincat/passage.hpp"

namespace fole {

enum class ConeKind { Limit, Colimit };

// Legs run vertex -> D(j) for a cone and D(j) -> vertex for a cocone.
template <Category C>
struct Cone {
  Passage<C> diagram;
  typename C::Object vertex;
  std::map<Id, typename C::Morphism> legs;
  ConeKind kind = ConeKind::Limit;

  const typename C::Morphism& leg(const Id& j) const { return lookup(legs, j, "cone leg"); }
  const C& category() const { return diagram.target(); }

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.diagram == b.diagram && a.vertex == b.vertex && a.legs == b.legs && a.kind == b.kind;
  }
};

template <Category C>
bool is_cone(const Cone<C>& c, std::string* why = nullptr) {
  const auto& cat = c.category();
  const auto& shape = c.diagram.source();
  auto no = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (c.legs.size() != shape.objects().size()) return no("wrong number of legs");
  for (const auto& j : shape.objects()) {
    auto it = c.legs.find(j);
    if (it == c.legs.end()) return no("missing leg at '" + j + "'");
    const auto& near = c.kind == ConeKind::Limit ? cat.source(it->second) : cat.target(it->second);
    const auto& far = c.kind == ConeKind::Limit ? cat.target(it->second) : cat.source(it->second);
    if (!(near == c.vertex) || !(far == c.diagram.object(j))) return no("leg at '" + j + "' has wrong endpoints");
  }
  for (const auto& u : shape.morphisms()) {
    if (shape.is_identity(u.id)) continue;
    const auto& du = c.diagram.morphism(u.id);
    bool ok = c.kind == ConeKind::Limit ? cat.compose(c.legs.at(u.source), du) == c.legs.at(u.target)
                                        : cat.compose(du, c.legs.at(u.target)) == c.legs.at(u.source);
    if (!ok) return no("leg triangle at '" + u.id + "' does not commute");
  }
  return true;
}

template <Category C>
void require_cone(const Cone<C>& c) {
  std::string why;
  if (!is_cone(c, &why)) fail(Errc::InvalidCone, why);
}

// Whether m (vertex' -> vertex for limits, vertex -> vertex' for colimits) carries the universal legs to the candidate's.
template <Category C>
bool factors(const Cone<C>& universal, const Cone<C>& candidate, const typename C::Morphism& m) {
  const auto& cat = universal.category();
  for (const auto& [j, leg] : universal.legs) {
    auto composed = universal.kind == ConeKind::Limit ? cat.compose(m, leg) : cat.compose(leg, m);
    if (!(composed == candidate.leg(j))) return false;
  }
  return true;
}

template <Category C>
struct LimitResult {
  Cone<C> cone;
  std::function<typename C::Morphism(const Cone<C>&)> mediator;

  const typename C::Object& vertex() const { return cone.vertex; }
};

}  // namespace fole
