#pragma once

#include "fole/diagrams/levo_dextro.hpp"
#include "support/generators.hpp"

namespace fole::testing {

// D2 is acute(R^op;D1) with keys optionally quotiented by row; the levo bridge is the quotient map.
inline DatabaseMorphismOver random_over_into(Rng& rng, const Database& d1, const Infomorphism& fg) {
  const auto& shape = d1.shape();
  auto acute = apply_functor(fixed_tables(d1, fg.target), tbl_acute_passage(fg));
  bool quotient = coin(rng);
  std::map<Id, Table> t2;
  std::map<Id, TableMorphism> levo;
  for (const auto& r : shape.objects()) {
    const auto& t = acute.object(r);
    if (!quotient) {
      t2.emplace(r, t);
      continue;
    }
    std::vector<Id> keys;
    std::map<Id, Tuple> rows;
    for (const auto& [k, row] : t.rows) {
      keys.push_back(tuple_text(row));
      rows[tuple_text(row)] = row;
    }
    t2.emplace(r, Table(t.domain, FinSet(keys), rows));
  }
  std::map<Id, TableMorphism> arrows;
  for (const auto& u : shape.morphisms()) {
    const auto& m = acute.morphism(u.id);
    std::map<Id, Id> k;
    for (const auto& kb : t2.at(u.target).keys)
      k[kb] = quotient ? tuple_text(restrict(m.domain_map.signature_map, t2.at(u.target).row(kb))) : m.key_map(kb);
    arrows.emplace(u.id, TableMorphism(t2.at(u.target), t2.at(u.source), m.domain_map,
                                       SetFn(t2.at(u.target).keys, t2.at(u.source).keys, k)));
  }
  auto d2 = make_database(shape, t2, arrows);
  for (const auto& r : shape.objects()) {
    const auto& t = acute.object(r);
    std::map<Id, Id> k;
    for (const auto& [key, row] : t.rows) k[key] = quotient ? tuple_text(row) : key;
    levo.emplace(r, TableMorphism(t, t2.at(r), SignedDomainMorphism::identity(t.domain), SetFn(t.keys, t2.at(r).keys, k)));
  }
  return make_over(d2, d1, identity_passage(shape), fg, levo);
}

// A1 has at most two values, so every value fibre of the infomorphism has at most two members.
inline DatabaseMorphismOver random_over(Rng& rng) {
  auto fg = random_infomorphism_to(rng, random_type_domain(rng, 3, 2), 3, 4);
  auto shape = pick(rng, std::vector<FinCategory>{cospan_shape(), span_shape(), chain_shape()});
  return random_over_into(rng, random_database(rng, shape, fg.target, 3, 2), fg);
}

// Levo bridge S2 => R;S1;f*: either the identity or the fold of a doubled schema.
inline SchemedMorphismOver random_schemed_over(Rng& rng) {
  auto fg = random_infomorphism(rng, 3, 4);
  auto d1 = random_database(rng, pick(rng, std::vector<FinCategory>{cospan_shape(), span_shape(), chain_shape()}), fg.target, 2, 2);
  auto s1 = sorted_schema(d1, fg.target.sorts);
  auto shape_map = identity_passage(d1.shape());
  auto pulled = apply_functor(compose_passages(shape_map, s1), f_star_passage(fg.sort_fn));
  if (coin(rng)) return {pulled, s1, shape_map, fg, identity_bridge(pulled)};
  auto doubled = [](const Signature& s) {
    std::map<Id, Id> sort;
    for (const auto& [i, x] : s.sort) {
      sort[pair_id("1", i)] = x;
      sort[pair_id("2", i)] = x;
    }
    std::vector<Id> ar;
    for (const auto& [i, x] : sort) ar.push_back(i);
    return Signature(FinSet(ar), sort, s.sorts);
  };
  std::map<Id, Signature> o;
  std::map<Id, SignatureMorphism> m, fold;
  for (const auto& r : d1.shape().objects()) o.emplace(r, doubled(pulled.object(r)));
  for (const auto& u : d1.shape().morphisms()) {
    const auto& h = pulled.morphism(u.id);
    std::map<Id, Id> dh;
    for (const auto& i : h.source.arity) {
      dh[pair_id("1", i)] = pair_id("1", h(i));
      dh[pair_id("2", i)] = pair_id("2", h(i));
    }
    m.emplace(u.id, SignatureMorphism::sorted(o.at(u.source), o.at(u.target), dh));
  }
  for (const auto& r : d1.shape().objects()) {
    std::map<Id, Id> f;
    for (const auto& i : pulled.object(r).arity) {
      f[pair_id("1", i)] = i;
      f[pair_id("2", i)] = i;
    }
    fold.emplace(r, SignatureMorphism::sorted(o.at(r), pulled.object(r), f));
  }
  SortedSchema s2(d1.shape(), ListX(fg.source.sorts), o, m);
  return {s2, s1, shape_map, fg, Bridge<ListX>(s2, pulled, fold)};
}

}  // namespace fole::testing
