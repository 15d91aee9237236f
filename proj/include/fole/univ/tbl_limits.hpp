#pragma once

#include <optional>

#include "fole/diagrams/database.hpp"
#include "fole/univ/list_limits.hpp"

namespace fole {

// The join: keys are compatible key families whose rows agree on every glued column of the signature colimit.
inline LimitResult<TblA> limit_tbl(const Database& db, std::optional<TypeDomain> over = std::nullopt) {
  auto diag = fixed_tables(db, over);
  const auto& a = diag.target().types();
  const auto& objs = db.shape().objects();
  auto key_d = key_projection(db);
  auto sig_d = sorted_schema(db, a.sorts);
  auto keys = limit_in_set(key_d);
  auto sig = colimit_in_listX(sig_d);
  std::vector<Id> kept;
  std::map<Id, Tuple> rows;
  for (const auto& e : keys.vertex()) {
    Tuple t;
    bool ok = true;
    for (const auto& r : objs) {
      for (const auto& [i, v] : db.table(r).row(keys.cone.leg(r)(e))) {
        auto [it, fresh] = t.emplace(sig.cone.leg(r)(i), v);
        if (!fresh && it->second != v) ok = false;
      }
    }
    if (ok) {
      kept.push_back(e);
      rows[e] = std::move(t);
    }
  }
  Table join(SignedDomain(sig.vertex(), a), FinSet(kept), std::move(rows));
  std::map<Id, TableMorphism> legs;
  for (const auto& r : objs) {
    std::map<Id, Id> k;
    for (const auto& e : kept) k[e] = keys.cone.leg(r)(e);
    legs.emplace(r, TableMorphism(join, db.table(r), SignedDomainMorphism::over(a, sig.cone.leg(r)), SetFn(join.keys, db.table(r).keys, k)));
  }
  Cone<TblA> cone{diag, join, std::move(legs), ConeKind::Limit};
  auto km = keys.mediator;
  auto sm = sig.mediator;
  auto mediator = [key_d, sig_d, join, a, km, sm](const Cone<TblA>& c) {
    require_cone(c);
    std::map<Id, SetFn> kl;
    std::map<Id, SignatureMorphism> sl;
    for (const auto& [r, m] : c.legs) {
      kl.emplace(r, m.key_map);
      sl.emplace(r, m.domain_map.signature_map);
    }
    auto k = km(Cone<SetCat>{key_d, c.vertex.keys, kl, ConeKind::Limit});
    auto h = sm(Cone<ListX>{sig_d, c.vertex.signature(), sl, ConeKind::Colimit});
    for (const auto& [v, e] : k.map)
      if (!join.keys.contains(e)) fail(Errc::NoMediator, "key '" + v + "' maps to a family that does not glue");
    try {
      return TableMorphism(c.vertex, join, SignedDomainMorphism::over(a, h), SetFn(c.vertex.keys, join.keys, k.map));
    } catch (const Error& e) {
      fail(Errc::NoMediator, e.what());
    }
  };
  return {std::move(cone), mediator};
}

// The sum: keys glued along the key maps, signature the limit of the signature diagram, rows restricted along its legs.
inline LimitResult<TblA> colimit_tbl(const Database& db, std::optional<TypeDomain> over = std::nullopt) {
  auto diag = fixed_tables(db, over);
  const auto& a = diag.target().types();
  const auto& objs = db.shape().objects();
  auto key_d = key_projection(db);
  auto sig_d = sorted_schema(db, a.sorts);
  auto keys = colimit_in_set(key_d);
  auto sig = limit_in_listX(sig_d);
  std::map<Id, Tuple> rows;
  for (const auto& r : objs)
    for (const auto& [k, row] : db.table(r).rows) {
      auto t = restrict(sig.cone.leg(r), row);
      const auto& cls = keys.cone.leg(r)(k);
      auto [it, fresh] = rows.emplace(cls, t);
      if (!fresh && it->second != t)
        fail(Errc::TupleGluingInconsistent, "key class '" + cls + "' carries two different restricted tuples");
    }
  Table sum(SignedDomain(sig.vertex(), a), keys.vertex(), std::move(rows));
  std::map<Id, TableMorphism> legs;
  for (const auto& r : objs)
    legs.emplace(r, TableMorphism(db.table(r), sum, SignedDomainMorphism::over(a, sig.cone.leg(r)), keys.cone.leg(r)));
  Cone<TblA> cone{diag, sum, std::move(legs), ConeKind::Colimit};
  auto km = keys.mediator;
  auto sm = sig.mediator;
  auto mediator = [key_d, sig_d, sum, a, km, sm](const Cone<TblA>& c) {
    require_cone(c);
    std::map<Id, SetFn> kl;
    std::map<Id, SignatureMorphism> sl;
    for (const auto& [r, m] : c.legs) {
      kl.emplace(r, m.key_map);
      sl.emplace(r, m.domain_map.signature_map);
    }
    auto k = km(Cone<SetCat>{key_d, c.vertex.keys, kl, ConeKind::Colimit});
    auto h = sm(Cone<ListX>{sig_d, c.vertex.signature(), sl, ConeKind::Limit});
    try {
      return TableMorphism(sum, c.vertex, SignedDomainMorphism::over(a, h), k);
    } catch (const Error& e) {
      fail(Errc::NoMediator, e.what());
    }
  };
  return {std::move(cone), mediator};
}

// The morphism J1 -> J2 between joins induced by <R,xi>: <R2,T2> -> <R1,T1>.
inline TableMorphism lim_passage_on_morphism(const DatabaseMorphism& m) {
  auto a = require_fixed(m.to);
  auto j1 = limit_tbl(m.to, a);
  auto j2 = limit_tbl(m.from, a);
  std::map<Id, TableMorphism> legs;
  for (const auto& r : m.from.shape().objects())
    legs.emplace(r, compose(j1.cone.leg(m.shape_map.object(r)), m.bridge.at(r)));
  return j2.mediator(Cone<TblA>{j2.cone.diagram, j1.vertex(), std::move(legs), ConeKind::Limit});
}

// The morphism colim S2 -> colim S1 induced by <R,sigma>: <R2,S2> -> <R1,S1>.
inline SignatureMorphism colim_passage_on_morphism(const LaxMorphism<ListX>& m) {
  auto c1 = colimit_in_listX(m.to);
  auto c2 = colimit_in_listX(m.from);
  std::map<Id, SignatureMorphism> legs;
  for (const auto& r : m.from.source().objects())
    legs.emplace(r, compose(m.bridge.at(r), c1.cone.leg(m.shape_map.object(r))));
  return c2.mediator(Cone<ListX>{m.from, c1.vertex(), std::move(legs), ConeKind::Colimit});
}

}  // namespace fole
