#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fole/diagrams/schema.hpp"
#include "fole/fincat/report.hpp"

namespace fole {

// Diagram of tables T: R^op -> Tbl.
class Database {
 public:
  Database(FinCategory shape, Passage<TblCat> tables) : shape_(std::move(shape)), tables_(std::move(tables)) {
    if (!(tables_.source() == opposite(shape_))) fail(Errc::EndpointMismatch, "table diagram must be defined on the opposite shape");
  }

  const FinCategory& shape() const { return shape_; }
  const Passage<TblCat>& tables() const { return tables_; }
  const Table& table(const Id& r) const { return tables_.object(r); }
  // For u: r -> r' in the shape, T(u): T(r') -> T(r).
  const TableMorphism& arrow(const Id& u) const { return tables_.morphism(u); }

  // The shared type domain when every table uses it and every arrow is the identity on it.
  std::optional<TypeDomain> common_types() const {
    std::optional<TypeDomain> a;
    for (const auto& r : shape_.objects()) {
      const auto& t = table(r).types();
      if (a && !(*a == t)) return std::nullopt;
      a = t;
    }
    if (!a) return std::nullopt;
    for (const auto& u : shape_.morphisms())
      if (!(arrow(u.id).domain_map.type_map == Infomorphism::identity(*a))) return std::nullopt;
    return a;
  }

  friend bool operator==(const Database& a, const Database& b) { return a.shape_ == b.shape_ && a.tables_ == b.tables_; }

 private:
  FinCategory shape_;
  Passage<TblCat> tables_;
};

// Arrow images are given for generating edges when the shape is free, and for every non-identity morphism otherwise.
inline Database make_database(const FinCategory& shape, std::map<Id, Table> tables, const std::map<Id, TableMorphism>& arrows) {
  auto op = opposite(shape);
  if (op.is_free()) return Database(shape, Passage<TblCat>::from_generators(op, TblCat{}, std::move(tables), arrows));
  std::map<Id, TableMorphism> mor;
  for (const auto& u : op.morphisms()) {
    if (op.is_identity(u.id))
      mor.emplace(u.id, TableMorphism::identity(lookup(tables, u.source, "database tables")));
    else
      mor.emplace(u.id, lookup(arrows, u.id, "database arrows"));
  }
  return Database(shape, Passage<TblCat>(op, TblCat{}, std::move(tables), std::move(mor)));
}

inline Database from_fixed(const FinCategory& shape, const Passage<TblA>& t) {
  return Database(shape, apply_functor(t, table_inclusion(t.target())));
}

inline TypeDomain require_fixed(const Database& db) {
  auto a = db.common_types();
  if (!a) {
    if (db.shape().objects().empty()) return TypeDomain{};
    fail(Errc::UnsupportedVaryingTypeDomains, "database tables do not share one type domain");
  }
  return *a;
}

// T as a diagram in Tbl(A); an empty database is taken over the supplied (or empty) type domain.
inline Passage<TblA> fixed_tables(const Database& db, std::optional<TypeDomain> over = std::nullopt) {
  TypeDomain a = db.shape().objects().empty() && over ? *over : require_fixed(db);
  return Passage<TblA>(db.tables().source(), TblA(a), db.tables().object_map(), db.tables().morphism_map());
}

// dom: R -> Dom, r |-> D(T r), u |-> dom(T u).
inline SchemedDomain dom_projection(const Database& db) {
  std::map<Id, SignedDomain> o;
  std::map<Id, SignedDomainMorphism> m;
  for (const auto& r : db.shape().objects()) o.emplace(r, db.table(r).domain);
  for (const auto& u : db.shape().morphisms()) m.emplace(u.id, db.arrow(u.id).domain_map);
  return SchemedDomain(db.shape(), DomCat{}, std::move(o), std::move(m));
}

inline Schema schema_projection(const Database& db) { return sign_projection(dom_projection(db)); }

// The X-sorted signature diagram of a fixed-type-domain database.
inline SortedSchema sorted_schema(const Database& db, const FinSet& sorts) {
  std::map<Id, Signature> o;
  std::map<Id, SignatureMorphism> m;
  for (const auto& r : db.shape().objects()) o.emplace(r, db.table(r).signature());
  for (const auto& u : db.shape().morphisms()) m.emplace(u.id, db.arrow(u.id).domain_map.signature_map);
  return SortedSchema(db.shape(), ListX(sorts), std::move(o), std::move(m));
}

// key: R^op -> Set.
inline Passage<SetCat> key_projection(const Database& db) {
  std::map<Id, FinSet> o;
  std::map<Id, SetFn> m;
  for (const auto& r : db.shape().objects()) o.emplace(r, db.table(r).keys);
  for (const auto& u : db.shape().morphisms()) m.emplace(u.id, db.arrow(u.id).key_map);
  return Passage<SetCat>(db.tables().source(), SetCat{}, std::move(o), std::move(m));
}

inline FinSet tuple_set_of(const SignedDomain& d) {
  std::vector<Id> ids;
  for (const auto& t : tup_set(d)) ids.push_back(tuple_text(t));
  return FinSet(ids);
}

inline SetFn tuple_function(const SignedDomainMorphism& m) {
  auto src = m.target();
  auto dst = m.source();
  std::map<Id, Id> f;
  for (const auto& t : tup_set(src)) f[tuple_text(t)] = tuple_text(tup_fn(m, t));
  return SetFn(tuple_set_of(src), tuple_set_of(dst), std::move(f));
}

// dom^op;tup: R^op -> Set, r |-> tup(D r).
inline Passage<SetCat> tuple_diagram(const Database& db) {
  std::map<Id, FinSet> o;
  std::map<Id, SetFn> m;
  for (const auto& r : db.shape().objects()) o.emplace(r, tuple_set_of(db.table(r).domain));
  for (const auto& u : db.shape().morphisms()) m.emplace(u.id, tuple_function(db.arrow(u.id).domain_map));
  return Passage<SetCat>(db.tables().source(), SetCat{}, std::move(o), std::move(m));
}

inline std::map<Id, SetFn> tuple_components(const Database& db) {
  std::map<Id, SetFn> c;
  for (const auto& r : db.shape().objects()) {
    const auto& t = db.table(r);
    std::map<Id, Id> f;
    for (const auto& [k, row] : t.rows) f[k] = tuple_text(row);
    c.emplace(r, SetFn(t.keys, tuple_set_of(t.domain), std::move(f)));
  }
  return c;
}

// tau: key => dom^op;tup, derived from the tables.
inline Bridge<SetCat> tuple_bridge(const Database& db) {
  return Bridge<SetCat>(key_projection(db), tuple_diagram(db), tuple_components(db));
}

// <R2,T2> -> <R1,T1> following the shape passage R: R2 -> R1, with bridge xi: R^op;T1 => T2.
struct DatabaseMorphism {
  Database from, to;
  Passage<FinCategory> shape_map;
  Bridge<TblCat> bridge;

  DatabaseMorphism(Database d2, Database d1, Passage<FinCategory> r, Bridge<TblCat> xi)
      : from(std::move(d2)), to(std::move(d1)), shape_map(std::move(r)), bridge(std::move(xi)) {
    if (!(shape_map.source() == from.shape()) || !(shape_map.target() == to.shape()))
      fail(Errc::EndpointMismatch, "shape passage does not connect the two database shapes");
    auto pulled = compose_passages(opposite_passage(shape_map), to.tables());
    if (bridge.source() == from.tables() && bridge.target() == pulled && !(pulled == from.tables()))
      fail(Errc::LaxDirectionBridge, "bridge runs T2 => R^op;T1; database morphisms need R^op;T1 => T2");
    if (!(bridge.source() == pulled) || !(bridge.target() == from.tables()))
      fail(Errc::EndpointMismatch, "bridge must run from R^op;T1 to T2");
  }

  static DatabaseMorphism identity(const Database& db) {
    return DatabaseMorphism(db, db, identity_passage(db.shape()), identity_bridge(db.tables()));
  }

  friend bool operator==(const DatabaseMorphism& a, const DatabaseMorphism& b) {
    return a.from == b.from && a.to == b.to && a.shape_map == b.shape_map && a.bridge == b.bridge;
  }
};

// first: D3 -> D2, second: D2 -> D1.
inline DatabaseMorphism compose_database_morphisms(const DatabaseMorphism& first, const DatabaseMorphism& second) {
  if (!(first.to == second.from)) fail(Errc::EndpointMismatch, "database morphisms do not compose");
  auto shape = compose_passages(first.shape_map, second.shape_map);
  auto bridge = vertical_compose(whisker_left(opposite_passage(first.shape_map), second.bridge), first.bridge);
  return DatabaseMorphism(first.from, second.to, shape, bridge);
}

// Unvalidated component data, for reporting on possibly faulty morphisms.
struct TableMorphismData {
  SignedDomainMorphism domain_map;
  std::map<Id, Id> key_map;
};

struct DatabaseMorphismData {
  Database from, to;
  Passage<FinCategory> shape_map;
  std::map<Id, TableMorphismData> components;
};

inline DatabaseMorphismData to_data(const DatabaseMorphism& m) {
  std::map<Id, TableMorphismData> c;
  for (const auto& [r, x] : m.bridge.components()) c.emplace(r, TableMorphismData{x.domain_map, x.key_map.map});
  return {m.from, m.to, m.shape_map, std::move(c)};
}

// Checks each component against the tuple bridges, key by key, then the naturality squares.
inline CheckReport check_database_morphism(const DatabaseMorphismData& m) {
  CheckReport rep;
  const auto& r2 = m.from.shape();
  std::map<Id, bool> good;
  for (const auto& r : r2.objects()) {
    auto at = [&](const std::string& why) { rep.fail_with("object '" + r + "': " + why); };
    good[r] = false;
    auto it = m.components.find(r);
    if (it == m.components.end()) {
      at("missing component");
      continue;
    }
    const auto& t1 = m.to.table(m.shape_map.object(r));
    const auto& t2 = m.from.table(r);
    const auto& c = it->second;
    if (!(c.domain_map.source() == t2.domain) || !(c.domain_map.target() == t1.domain)) {
      at("domain map endpoints do not match");
      continue;
    }
    bool ok = c.key_map.size() == t1.keys.size();
    for (const auto& k1 : t1.keys) {
      auto kt = c.key_map.find(k1);
      if (kt == c.key_map.end() || !t2.keys.contains(kt->second)) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      at("key map is not a function into the target keys");
      continue;
    }
    for (const auto& k1 : t1.keys)
      if (tuple_text(t2.row(c.key_map.at(k1))) != tuple_text(tup_fn(c.domain_map, t1.row(k1)))) {
        at("tuple condition fails at key '" + k1 + "'");
        ok = false;
        break;
      }
    good[r] = ok;
  }
  for (const auto& u : r2.morphisms()) {
    if (r2.is_identity(u.id) || !good[u.source] || !good[u.target]) continue;
    // in R2^op, u: b -> a with a = source, b = target; square xi_b;T2(u) = T1(R u);xi_a
    const auto& xa = m.components.at(u.source);
    const auto& xb = m.components.at(u.target);
    const auto& t2u = m.from.arrow(u.id);
    const auto& t1u = m.to.arrow(m.shape_map.morphism(u.id));
    bool ok = compose(t2u.domain_map, xb.domain_map) == compose(xa.domain_map, t1u.domain_map);
    for (const auto& k : t1u.source.keys)
      if (t2u.key_map(xb.key_map.at(k)) != xa.key_map.at(t1u.key_map(k))) ok = false;
    if (!ok) rep.fail_with("arrow '" + u.id + "': naturality square does not commute");
  }
  return rep;
}

inline CheckReport check_database_morphism(const DatabaseMorphism& m) { return check_database_morphism(to_data(m)); }

inline DatabaseMorphism realize(const DatabaseMorphismData& m) {
  auto rep = check_database_morphism(m);
  if (!rep.ok()) fail(Errc::ValidationError, rep.failures.front());
  std::map<Id, TableMorphism> c;
  for (const auto& r : m.from.shape().objects()) {
    const auto& x = m.components.at(r);
    const auto& t1 = m.to.table(m.shape_map.object(r));
    const auto& t2 = m.from.table(r);
    c.emplace(r, TableMorphism(t1, t2, x.domain_map, SetFn(t1.keys, t2.keys, x.key_map)));
  }
  auto pulled = compose_passages(opposite_passage(m.shape_map), m.to.tables());
  return DatabaseMorphism(m.from, m.to, m.shape_map, Bridge<TblCat>(pulled, m.from.tables(), std::move(c)));
}

}  // namespace fole
