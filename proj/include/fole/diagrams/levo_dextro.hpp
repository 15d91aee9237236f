#pragma once

#include "fole/core/fiber.hpp"
#include "fole/diagrams/database.hpp"

namespace fole {

template <Category C, Category D>
const AdjunctionWitness<C, D>& require_witness(const AdjunctionWitness<C, D>* w) {
  if (!w || !w->unit || !w->counit || !w->left.on_object || !w->right.on_object)
    fail(Errc::MissingAdjunctionWitness, "no fiber adjunction supplied for the type-domain morphism");
  return *w;
}

// Schemed-domain morphism <R2,S2,A2> -> <R1,S1,A1> over <f,g>: A2 <-> A1, in levo form S2 => R;S1;f*.
struct SchemedMorphismOver {
  SortedSchema from, to;
  Passage<FinCategory> shape_map;
  Infomorphism types;
  Bridge<ListX> levo;
};

inline SortedSchema pulled_schema(const SchemedMorphismOver& m) { return compose_passages(m.shape_map, m.to); }

// S2;Sigma_f => R;S1, components L(phi);counit.
inline Bridge<ListX> schemed_levo_to_dextro(const SchemedMorphismOver& m, const AdjunctionWitness<ListX, ListX>* w) {
  const auto& adj = require_witness(w);
  auto rs1 = pulled_schema(m);
  std::map<Id, SignatureMorphism> c;
  for (const auto& r : m.from.source().objects()) c.emplace(r, adj.to_left(rs1.object(r), m.levo.at(r)));
  return Bridge<ListX>(apply_functor(m.from, adj.left), rs1, std::move(c));
}

// S2 => R;S1;f*, components unit;R(phi).
inline Bridge<ListX> schemed_dextro_to_levo(const SchemedMorphismOver& m, const Bridge<ListX>& dextro,
                                            const AdjunctionWitness<ListX, ListX>* w) {
  const auto& adj = require_witness(w);
  std::map<Id, SignatureMorphism> c;
  for (const auto& r : m.from.source().objects()) c.emplace(r, adj.to_right(m.from.object(r), dextro.at(r)));
  return Bridge<ListX>(m.from, apply_functor(pulled_schema(m), adj.right), std::move(c));
}

inline SchemedDomain included_schemed(const SortedSchema& s, const TypeDomain& a) { return apply_functor(s, list_inclusion(a)); }

// The composite in Dom through the levo side: inc(phi_levo) then the grave inclusion.
inline SchemedDomainMorphism schemed_composite_from_levo(const SchemedMorphismOver& m) {
  auto rs1 = pulled_schema(m);
  std::map<Id, SignedDomainMorphism> c;
  for (const auto& r : m.from.source().objects())
    c.emplace(r, compose(SignedDomainMorphism::over(m.types.source, m.levo.at(r)), iota_grave(m.types, rs1.object(r))));
  auto from = included_schemed(m.from, m.types.source);
  auto to = included_schemed(m.to, m.types.target);
  return SchemedDomainMorphism(from, to, m.shape_map, Bridge<DomCat>(from, compose_passages(m.shape_map, to), std::move(c)));
}

// The composite through the dextro side: the acute inclusion then inc(phi_dextro).
inline SchemedDomainMorphism schemed_composite_from_dextro(const SchemedMorphismOver& m, const Bridge<ListX>& dextro) {
  std::map<Id, SignedDomainMorphism> c;
  for (const auto& r : m.from.source().objects())
    c.emplace(r, compose(iota_acute(m.types, m.from.object(r)), SignedDomainMorphism::over(m.types.target, dextro.at(r))));
  auto from = included_schemed(m.from, m.types.source);
  auto to = included_schemed(m.to, m.types.target);
  return SchemedDomainMorphism(from, to, m.shape_map, Bridge<DomCat>(from, compose_passages(m.shape_map, to), std::move(c)));
}

// Database morphism <R2,T2,A2> -> <R1,T1,A1> over <f,g>: A2 <-> A1, in levo form R^op;T1;acute => T2 inside Tbl(A2).
struct DatabaseMorphismOver {
  Database from, to;
  Passage<FinCategory> shape_map;
  Infomorphism types;
  Bridge<TblA> levo;
};

inline Passage<TblA> pulled_tables(const DatabaseMorphismOver& m) {
  return compose_passages(opposite_passage(m.shape_map), fixed_tables(m.to, m.types.target));
}

inline DatabaseMorphismOver make_over(const Database& from, const Database& to, const Passage<FinCategory>& shape_map,
                                      const Infomorphism& fg, const std::map<Id, TableMorphism>& levo) {
  auto pulled = compose_passages(opposite_passage(shape_map), fixed_tables(to, fg.target));
  auto acute = apply_functor(pulled, tbl_acute_passage(fg));
  return {from, to, shape_map, fg, Bridge<TblA>(acute, fixed_tables(from, fg.source), levo)};
}

// R^op;T1 => T2;grave, components unit;grave(psi).
inline Bridge<TblA> db_levo_to_dextro(const DatabaseMorphismOver& m, const AdjunctionWitness<TblA, TblA>* w) {
  const auto& adj = require_witness(w);
  auto pulled = pulled_tables(m);
  std::map<Id, TableMorphism> c;
  for (const auto& r : m.from.shape().objects()) c.emplace(r, adj.to_right(pulled.object(r), m.levo.at(r)));
  return Bridge<TblA>(pulled, apply_functor(fixed_tables(m.from, m.types.source), adj.right), std::move(c));
}

// R^op;T1;acute => T2, components acute(psi);counit.
inline Bridge<TblA> db_dextro_to_levo(const DatabaseMorphismOver& m, const Bridge<TblA>& dextro,
                                      const AdjunctionWitness<TblA, TblA>* w) {
  const auto& adj = require_witness(w);
  std::map<Id, TableMorphism> c;
  for (const auto& r : m.from.shape().objects()) c.emplace(r, adj.to_left(m.from.table(r), dextro.at(r)));
  return Bridge<TblA>(apply_functor(pulled_tables(m), adj.left), fixed_tables(m.from, m.types.source), std::move(c));
}

// xi = chi_acute then psi_levo.
inline DatabaseMorphism include_db_in_DB(const DatabaseMorphismOver& m) {
  auto pulled = compose_passages(opposite_passage(m.shape_map), m.to.tables());
  std::map<Id, TableMorphism> c;
  for (const auto& r : m.from.shape().objects())
    c.emplace(r, compose(chi_acute(m.types, pulled.object(r)), m.levo.at(r)));
  return DatabaseMorphism(m.from, m.to, m.shape_map, Bridge<TblCat>(pulled, m.from.tables(), std::move(c)));
}

// xi = psi_dextro then chi_grave.
inline DatabaseMorphism include_dextro_in_DB(const DatabaseMorphismOver& m, const Bridge<TblA>& dextro) {
  auto pulled = compose_passages(opposite_passage(m.shape_map), m.to.tables());
  std::map<Id, TableMorphism> c;
  for (const auto& r : m.from.shape().objects()) c.emplace(r, compose(dextro.at(r), chi_grave(m.types, m.from.table(r))));
  return DatabaseMorphism(m.from, m.to, m.shape_map, Bridge<TblCat>(pulled, m.from.tables(), std::move(c)));
}

// acute along first;second (A3 <-> A1) compared with acute along second then acute along first; keys fixed,
// columns ((i,x2),x3) |-> (i,x3).
inline TableMorphism acute_comparison(const Infomorphism& first, const Infomorphism& second, const Table& t) {
  auto whole = tbl_acute(compose(first, second), t);
  auto stepwise = tbl_acute(first, tbl_acute(second, t));
  std::map<Id, Id> h;
  for (const auto& i : t.signature().arity)
    for (const auto& x3 : first.sort_fn.domain) {
      auto x2 = first.sort_fn(x3);
      if (second.sort_fn(x2) == t.signature().sort_of(i)) h[pulled_index(pulled_index(i, x2), x3)] = pulled_index(i, x3);
    }
  return TableMorphism::over(whole, stepwise, h, SetFn::identity(t.keys).map);
}

// first: D3 -> D2 over <f',g'>, second: D2 -> D1 over <f,g>; composite over <f',g'> then <f,g>.
inline DatabaseMorphismOver compose_over(const DatabaseMorphismOver& first, const DatabaseMorphismOver& second) {
  if (!(first.to == second.from)) fail(Errc::EndpointMismatch, "database morphisms over type domains do not compose");
  auto fg = compose(first.types, second.types);
  auto shape = compose_passages(first.shape_map, second.shape_map);
  std::map<Id, TableMorphism> c;
  for (const auto& r3 : first.from.shape().objects()) {
    auto r2 = first.shape_map.object(r3);
    const auto& t1 = second.to.table(second.shape_map.object(r2));
    auto step = compose(acute_comparison(first.types, second.types, t1), tbl_acute(first.types, second.levo.at(r2)));
    c.emplace(r3, compose(step, first.levo.at(r3)));
  }
  return make_over(first.from, second.to, shape, fg, c);
}

inline DatabaseMorphismOver identity_over(const Database& db) {
  auto a = require_fixed(db);
  auto fg = Infomorphism::identity(a);
  std::map<Id, TableMorphism> c;
  for (const auto& r : db.shape().objects()) {
    const auto& t = db.table(r);
    auto acute = tbl_acute(fg, t);
    std::map<Id, Id> h;
    for (const auto& [i, x] : t.signature().sort) h[i] = pulled_index(i, x);
    c.emplace(r, TableMorphism::over(acute, t, h, SetFn::identity(t.keys).map));
  }
  return make_over(db, db, identity_passage(db.shape()), fg, c);
}

}  // namespace fole
