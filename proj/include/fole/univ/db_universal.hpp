#pragma once

#include <functional>

#include "fole/diagrams/database.hpp"
#include "fole/fincat/constructions.hpp"

namespace fole {

inline Database db_initial() {
  auto e = empty_category();
  return Database(e, Passage<TblCat>(opposite(e), TblCat{}, {}, {}));
}

// The unique morphism out of the initial database (in the direction of shape passages).
inline DatabaseMorphism initial_morphism(const Database& db) {
  auto init = db_initial();
  Passage<FinCategory> r(init.shape(), db.shape(), {}, {});
  auto pulled = compose_passages(opposite_passage(r), db.tables());
  return DatabaseMorphism(init, db, r, Bridge<TblCat>(pulled, init.tables(), {}));
}

struct DbCoproduct {
  Database sum;
  DatabaseMorphism inj1, inj2;
  // copair(c1: D1 -> W, c2: D2 -> W) is the morphism sum -> W.
  std::function<DatabaseMorphism(const DatabaseMorphism&, const DatabaseMorphism&)> copair;
};

inline Passage<FinCategory> coproduct_injection(const FinCategory& part, const FinCategory& sum, int tag) {
  std::map<Id, Id> o, m;
  for (const auto& x : part.objects()) o[x] = tagged_id(tag, x);
  for (const auto& f : part.morphisms()) m[f.id] = tagged_id(tag, f.id);
  return Passage<FinCategory>(part, sum, o, m);
}

// Independent union: shape R1 + R2 with each table kept at its tagged object.
inline DbCoproduct db_coproduct(const Database& d1, const Database& d2) {
  auto shape = coproduct_category(d1.shape(), d2.shape());
  std::map<Id, Table> o;
  std::map<Id, TableMorphism> m;
  int tag = 1;
  for (const Database* d : {&d1, &d2}) {
    for (const auto& r : d->shape().objects()) o.emplace(tagged_id(tag, r), d->table(r));
    for (const auto& u : d->shape().morphisms()) m.emplace(tagged_id(tag, u.id), d->arrow(u.id));
    ++tag;
  }
  Database sum(shape, Passage<TblCat>(opposite(shape), TblCat{}, std::move(o), std::move(m)));
  auto inj = [&](const Database& d, int t) {
    auto r = coproduct_injection(d.shape(), shape, t);
    return DatabaseMorphism(d, sum, r, identity_bridge(compose_passages(opposite_passage(r), sum.tables())));
  };
  auto copair = [sum](const DatabaseMorphism& c1, const DatabaseMorphism& c2) {
    if (!(c1.to == c2.to)) fail(Errc::NoMediator, "cocone legs end at different databases");
    const auto& w = c1.to;
    std::map<Id, Id> o, m;
    std::map<Id, TableMorphism> xi;
    int tag = 1;
    for (const DatabaseMorphism* c : {&c1, &c2}) {
      for (const auto& r : c->from.shape().objects()) {
        o[tagged_id(tag, r)] = c->shape_map.object(r);
        xi.emplace(tagged_id(tag, r), c->bridge.at(r));
      }
      for (const auto& u : c->from.shape().morphisms()) m[tagged_id(tag, u.id)] = c->shape_map.morphism(u.id);
      ++tag;
    }
    Passage<FinCategory> r(sum.shape(), w.shape(), o, m);
    auto pulled = compose_passages(opposite_passage(r), w.tables());
    return DatabaseMorphism(sum, w, r, Bridge<TblCat>(pulled, sum.tables(), std::move(xi)));
  };
  return {sum, inj(d1, 1), inj(d2, 2), copair};
}

struct DbProduct {
  Database product;
  DatabaseMorphism proj1, proj2;
  // pair(c1: W -> D1, c2: W -> D2) is the morphism W -> product; it exists when both legs carry the same bridge.
  std::function<DatabaseMorphism(const DatabaseMorphism&, const DatabaseMorphism&)> pair;
};

// Shape R12 with R12^op the pullback of T1 and T2 over Tbl; tables pulled back along either projection.
inline DbProduct db_product(const Database& d1, const Database& d2) {
  auto span = pullback_category(d1.tables(), d2.tables());
  auto shape = opposite(span.apex);
  Database prod(shape, compose_passages(span.left, d1.tables()));
  auto p1 = opposite_passage(span.left);
  auto p2 = opposite_passage(span.right);
  auto proj = [&](const Database& d, const Passage<FinCategory>& p) {
    return DatabaseMorphism(prod, d, p, identity_bridge(compose_passages(opposite_passage(p), d.tables())));
  };
  auto pair = [prod](const DatabaseMorphism& c1, const DatabaseMorphism& c2) {
    if (!(c1.from == c2.from)) fail(Errc::NoMediator, "cone legs start at different databases");
    if (!(c1.bridge.components() == c2.bridge.components()))
      fail(Errc::NoMediator, "the two legs carry different bridges, so no morphism into the product factors both");
    const auto& w = c1.from;
    std::map<Id, Id> o, m;
    for (const auto& r : w.shape().objects()) o[r] = pair_id(c1.shape_map.object(r), c2.shape_map.object(r));
    for (const auto& u : w.shape().morphisms()) m[u.id] = pair_id(c1.shape_map.morphism(u.id), c2.shape_map.morphism(u.id));
    for (const auto& [r, x] : o)
      if (!prod.shape().has_object(x)) fail(Errc::NoMediator, "legs disagree on the table at '" + r + "'");
    for (const auto& [u, x] : m)
      if (!prod.shape().has_morphism(x)) fail(Errc::NoMediator, "legs disagree on the arrow '" + u + "'");
    Passage<FinCategory> r(w.shape(), prod.shape(), o, m);
    auto pulled = compose_passages(opposite_passage(r), prod.tables());
    return DatabaseMorphism(w, prod, r, Bridge<TblCat>(pulled, w.tables(), c1.bridge.components()));
  };
  return {prod, proj(d1, p1), proj(d2, p2), pair};
}

// hom(from, to) in the direction of shape passages, for fixed-type-domain databases.
template <class Visit>
void for_each_database_morphism(const Database& from, const Database& to, Visit&& visit) {
  const auto& objs = from.shape().objects();
  for_each_passage(from.shape(), to.shape(), [&](const Passage<FinCategory>& r) {
    std::vector<std::vector<TableMorphism>> choices;
    for (const auto& x : objs) {
      choices.push_back(table_morphisms(to.table(r.object(x)), from.table(x)));
      if (choices.back().empty()) return;
    }
    auto pulled = compose_passages(opposite_passage(r), to.tables());
    std::vector<std::size_t> idx(objs.size(), 0);
    while (true) {
      std::map<Id, TableMorphism> c;
      for (std::size_t n = 0; n < objs.size(); ++n) c.emplace(objs[n], choices[n][idx[n]]);
      bool natural = true;
      for (const auto& u : from.shape().morphisms()) {
        if (from.shape().is_identity(u.id)) continue;
        if (!(compose(c.at(u.target), from.arrow(u.id)) == compose(pulled.morphism(u.id), c.at(u.source)))) {
          natural = false;
          break;
        }
      }
      if (natural) visit(DatabaseMorphism(from, to, r, Bridge<TblCat>(pulled, from.tables(), std::move(c))));
      std::size_t n = 0;
      while (n < idx.size() && ++idx[n] == choices[n].size()) idx[n++] = 0;
      if (n == idx.size()) return;
    }
  });
}

inline std::vector<DatabaseMorphism> database_morphisms(const Database& from, const Database& to) {
  std::vector<DatabaseMorphism> out;
  for_each_database_morphism(from, to, [&](DatabaseMorphism m) { out.push_back(std::move(m)); });
  return out;
}

}  // namespace fole
