#pragma once

#include "fole/core/table.hpp"
#include "fole/fincat/passage.hpp"

namespace fole {

using Schema = Passage<ListCat>;          // R -> List
using SortedSchema = Passage<ListX>;      // R -> List(X)
using SchemedDomain = Passage<DomCat>;    // R -> Dom
using TypeDiagram = Passage<ClsCat>;      // R -> Cls

// Morphism <R2,F2> -> <R1,F1> following its shape passage R: R2 -> R1, with bridge F2 => R;F1.
template <Category C>
struct LaxMorphism {
  Passage<C> from, to;
  Passage<FinCategory> shape_map;
  Bridge<C> bridge;

  LaxMorphism(Passage<C> f2, Passage<C> f1, Passage<FinCategory> r, Bridge<C> b)
      : from(std::move(f2)), to(std::move(f1)), shape_map(std::move(r)), bridge(std::move(b)) {
    if (!(shape_map.source() == from.source()) || !(shape_map.target() == to.source()))
      fail(Errc::EndpointMismatch, "shape passage does not connect the two shapes");
    if (!(bridge.source() == from) || !(bridge.target() == compose_passages(shape_map, to)))
      fail(Errc::EndpointMismatch, "bridge must run from the source diagram to the shape-composed target diagram");
  }

  static LaxMorphism identity(const Passage<C>& d) {
    auto id = identity_passage(d.source());
    return LaxMorphism(d, d, id, identity_bridge(d));
  }

  friend bool operator==(const LaxMorphism&, const LaxMorphism&) = default;
};

// first: <R3,F3> -> <R2,F2>, second: <R2,F2> -> <R1,F1>.
template <Category C>
LaxMorphism<C> compose_lax(const LaxMorphism<C>& first, const LaxMorphism<C>& second) {
  if (!(first.to == second.from)) fail(Errc::EndpointMismatch, "lax morphisms do not compose");
  auto shape = compose_passages(first.shape_map, second.shape_map);
  auto bridge = vertical_compose(first.bridge, whisker_left(first.shape_map, second.bridge));
  return LaxMorphism<C>(first.from, second.to, shape, bridge);
}

using SchemaMorphism = LaxMorphism<ListCat>;
using SortedSchemaMorphism = LaxMorphism<ListX>;
using SchemedDomainMorphism = LaxMorphism<DomCat>;

inline SchemaMorphism compose_schema_morphisms(const SchemaMorphism& a, const SchemaMorphism& b) { return compose_lax(a, b); }
inline SchemedDomainMorphism compose_schemed_morphisms(const SchemedDomainMorphism& a, const SchemedDomainMorphism& b) {
  return compose_lax(a, b);
}

inline Functor<ListCat, SetCat> arity_functor() {
  return {ListCat{}, SetCat{}, [](const Signature& s) { return s.arity; }, [](const SignatureMorphism& m) { return m.arity_map; }};
}
inline Functor<ListCat, SetCat> sort_functor() {
  return {ListCat{}, SetCat{}, [](const Signature& s) { return s.sorts; }, [](const SignatureMorphism& m) { return m.sort_map; }};
}
inline Functor<ListX, ListCat> sorted_inclusion(const ListX& c) {
  return {c, ListCat{}, [](const Signature& s) { return s; }, [](const SignatureMorphism& m) { return m; }};
}
inline Functor<DomCat, ListCat> sign_functor() {
  return {DomCat{}, ListCat{}, [](const SignedDomain& d) { return d.signature; },
          [](const SignedDomainMorphism& m) { return m.signature_map; }};
}
inline Functor<DomCat, ClsCat> data_functor() {
  return {DomCat{}, ClsCat{}, [](const SignedDomain& d) { return d.types; }, [](const SignedDomainMorphism& m) { return m.type_map; }};
}
inline Functor<ClsCat, SetCat> cls_sort_functor() {
  return {ClsCat{}, SetCat{}, [](const TypeDomain& a) { return a.sorts; }, [](const Infomorphism& m) { return m.sort_fn; }};
}

template <Category C, Category D>
LaxMorphism<D> project(const LaxMorphism<C>& m, const Functor<C, D>& f) {
  return LaxMorphism<D>(apply_functor(m.from, f), apply_functor(m.to, f), m.shape_map, whisker_right(m.bridge, f));
}

inline Passage<SetCat> arity_projection(const Schema& s) { return apply_functor(s, arity_functor()); }
inline Passage<SetCat> sort_projection(const Schema& s) { return apply_functor(s, sort_functor()); }
inline LaxMorphism<SetCat> arity_projection(const SchemaMorphism& m) { return project(m, arity_functor()); }
inline LaxMorphism<SetCat> sort_projection(const SchemaMorphism& m) { return project(m, sort_functor()); }

inline Schema sign_projection(const SchemedDomain& q) { return apply_functor(q, sign_functor()); }
inline TypeDiagram data_projection(const SchemedDomain& q) { return apply_functor(q, data_functor()); }
inline SchemaMorphism sign_projection(const SchemedDomainMorphism& m) { return project(m, sign_functor()); }
inline LaxMorphism<ClsCat> data_projection(const SchemedDomainMorphism& m) { return project(m, data_functor()); }

// Rebuilds the schemed domain from its signature and type-domain projections; sort diagrams must agree exactly.
inline SchemedDomain reconstruct(const Schema& s, const TypeDiagram& a) {
  if (!(s.source() == a.source())) fail(Errc::SortDiagramMismatch, "projections live on different shapes");
  auto xs = sort_projection(s);
  auto xa = apply_functor(a, cls_sort_functor());
  for (const auto& r : s.source().objects())
    if (!(xs.object(r) == xa.object(r))) fail(Errc::SortDiagramMismatch, "sort sets differ at '" + r + "'");
  for (const auto& u : s.source().morphisms())
    if (!(xs.morphism(u.id) == xa.morphism(u.id))) fail(Errc::SortDiagramMismatch, "sort functions differ at '" + u.id + "'");
  std::map<Id, SignedDomain> o;
  std::map<Id, SignedDomainMorphism> m;
  for (const auto& r : s.source().objects()) o.emplace(r, SignedDomain(s.object(r), a.object(r)));
  for (const auto& u : s.source().morphisms()) m.emplace(u.id, SignedDomainMorphism(s.morphism(u.id), a.morphism(u.id)));
  return SchemedDomain(s.source(), DomCat{}, o, m);
}

}  // namespace fole
