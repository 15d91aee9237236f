#pragma once

#include <map>
#include <memory>
#include <vector>

#include "fole/core/adjunction.hpp"
#include "fole/core/table.hpp"

namespace fole {

// Sigma_f: List(X2) -> List(X1), (I,s) |-> (I, s;f).
inline Signature sigma_f(const SetFn& f, const Signature& s) {
  std::map<Id, Id> sort;
  for (const auto& [i, x] : s.sort) sort[i] = f(x);
  return Signature(s.arity, std::move(sort), f.codomain);
}

inline SignatureMorphism sigma_f(const SetFn& f, const SignatureMorphism& h) {
  return SignatureMorphism::sorted(sigma_f(f, h.source), sigma_f(f, h.target), h.arity_map.map);
}

inline Id pulled_index(const Id& i, const Id& x2) { return pair_id(i, x2); }

// f^*: List(X1) -> List(X2), (I,s) |-> ({(i,x2) | s(i) = f(x2)}, second projection).
inline Signature f_star(const SetFn& f, const Signature& s) {
  std::vector<Id> arity;
  std::map<Id, Id> sort;
  for (const auto& i : s.arity)
    for (const auto& x2 : f.domain)
      if (f(x2) == s.sort_of(i)) {
        arity.push_back(pulled_index(i, x2));
        sort[pulled_index(i, x2)] = x2;
      }
  return Signature(FinSet(arity), std::move(sort), f.domain);
}

inline SignatureMorphism f_star(const SetFn& f, const SignatureMorphism& h) {
  auto src = f_star(f, h.source), tgt = f_star(f, h.target);
  std::map<Id, Id> m;
  for (const auto& i : h.source.arity)
    for (const auto& x2 : f.domain)
      if (f(x2) == h.source.sort_of(i)) m[pulled_index(i, x2)] = pulled_index(h(i), x2);
  return SignatureMorphism::sorted(src, tgt, std::move(m));
}

// S -> f^*(Sigma_f S): i |-> (i, s(i)).
inline SignatureMorphism list_unit(const SetFn& f, const Signature& s) {
  std::map<Id, Id> m;
  for (const auto& [i, x] : s.sort) m[i] = pulled_index(i, x);
  return SignatureMorphism::sorted(s, f_star(f, sigma_f(f, s)), std::move(m));
}

// Sigma_f(f^* S) -> S: (i,x2) |-> i.
inline SignatureMorphism list_counit(const SetFn& f, const Signature& s) {
  auto pulled = sigma_f(f, f_star(f, s));
  std::map<Id, Id> m;
  for (const auto& i : s.arity)
    for (const auto& x2 : f.domain)
      if (f(x2) == s.sort_of(i)) m[pulled_index(i, x2)] = i;
  return SignatureMorphism::sorted(pulled, s, std::move(m));
}

inline Functor<ListX, ListX> sigma_passage(const SetFn& f) {
  return {ListX(f.domain), ListX(f.codomain), [f](const Signature& s) { return sigma_f(f, s); },
          [f](const SignatureMorphism& h) { return sigma_f(f, h); }};
}

inline Functor<ListX, ListX> f_star_passage(const SetFn& f) {
  return {ListX(f.codomain), ListX(f.domain), [f](const Signature& s) { return f_star(f, s); },
          [f](const SignatureMorphism& h) { return f_star(f, h); }};
}

inline AdjunctionWitness<ListX, ListX> list_fiber_adjunction(const SetFn& f) {
  return {sigma_passage(f), f_star_passage(f), [f](const Signature& s) { return list_unit(f, s); },
          [f](const Signature& s) { return list_counit(f, s); }};
}

// Table level, over <f,g>: A2 <-> A1.

inline Table tbl_acute(const Infomorphism& fg, const Table& t1) {
  const auto& f = fg.sort_fn;
  auto s2 = f_star(f, t1.signature());
  std::map<Id, Tuple> rows;
  for (const auto& [k, t] : t1.rows) {
    Tuple u;
    for (const auto& [i, x] : t1.signature().sort)
      for (const auto& x2 : f.domain)
        if (f(x2) == x) u[pulled_index(i, x2)] = fg.value_fn(t.at(i));
    rows[k] = std::move(u);
  }
  return Table(SignedDomain(s2, fg.source), t1.keys, std::move(rows));
}

inline TableMorphism tbl_acute(const Infomorphism& fg, const TableMorphism& m) {
  auto h = f_star(fg.sort_fn, m.domain_map.signature_map);
  return TableMorphism(tbl_acute(fg, m.source), tbl_acute(fg, m.target), SignedDomainMorphism::over(fg.source, h), m.key_map);
}

inline Id grave_key(const Id& k2, const Tuple& t) { return pair_id(k2, tuple_text(t)); }

// Visits (k2, t) for every row of grave(T2): t ranges over A1-tuples on Sigma_f(S2) with g . t = t2(k2).
template <class Visit>
void for_each_grave_row(const Infomorphism& fg, const Table& t2, const Signature& s1, Visit&& visit) {
  const auto& is = s1.arity.elements();
  for (const auto& [k2, row] : t2.rows) {
    std::vector<std::vector<Id>> choices;
    for (const auto& i : is) {
      std::vector<Id> c;
      for (const auto& y : fg.target.extent(s1.sort_of(i)))
        if (fg.value_fn(y) == row.at(i)) c.push_back(y);
      if (c.empty()) break;
      choices.push_back(std::move(c));
    }
    if (choices.size() != is.size()) continue;
    std::vector<std::size_t> idx(is.size(), 0);
    while (true) {
      Tuple t;
      for (std::size_t n = 0; n < is.size(); ++n) t[is[n]] = choices[n][idx[n]];
      visit(k2, std::move(t));
      std::size_t n = 0;
      while (n < idx.size() && ++idx[n] == choices[n].size()) idx[n++] = 0;
      if (n == idx.size()) break;
    }
  }
}

// grave(T2) together with the T2 key each of its rows lies over.
struct GraveImage {
  Table table;
  std::map<Id, Id> origin;
};

inline GraveImage grave_image(const Infomorphism& fg, const Table& t2) {
  auto s1 = sigma_f(fg.sort_fn, t2.signature());
  std::vector<Id> keys;
  std::map<Id, Tuple> rows;
  std::map<Id, Id> origin;
  for_each_grave_row(fg, t2, s1, [&](const Id& k2, Tuple t) {
    auto key = grave_key(k2, t);
    keys.push_back(key);
    origin.emplace(key, k2);
    rows.emplace(std::move(key), std::move(t));
  });
  return {Table(SignedDomain(s1, fg.target), FinSet(keys), std::move(rows)), std::move(origin)};
}

inline Table tbl_grave(const Infomorphism& fg, const Table& t2) { return grave_image(fg, t2).table; }

inline TableMorphism tbl_grave(const Infomorphism& fg, const TableMorphism& m, const GraveImage& src, const Table& tgt) {
  const auto& h = m.domain_map.signature_map;
  std::map<Id, Id> k;
  for (const auto& [key, t] : src.table.rows) k.emplace_hint(k.end(), key, grave_key(m.key_map(src.origin.at(key)), restrict(h, t)));
  auto sh = sigma_f(fg.sort_fn, h);
  return TableMorphism(src.table, tgt, SignedDomainMorphism::over(fg.target, sh), SetFn(src.table.keys, tgt.keys, std::move(k)));
}

inline TableMorphism tbl_grave(const Infomorphism& fg, const TableMorphism& m) {
  return tbl_grave(fg, m, grave_image(fg, m.source), tbl_grave(fg, m.target));
}

// T1 -> grave(acute(T1)): signature part is the list counit, k |-> (k, t1(k) along the counit).
inline TableMorphism tbl_unit(const Infomorphism& fg, const Table& t1) {
  auto target = tbl_grave(fg, tbl_acute(fg, t1));
  auto h = list_counit(fg.sort_fn, t1.signature());
  std::map<Id, Id> k;
  for (const auto& [key, row] : t1.rows) k[key] = grave_key(key, restrict(h, row));
  return TableMorphism(t1, target, SignedDomainMorphism::over(fg.target, h), SetFn(t1.keys, target.keys, std::move(k)));
}

// acute(grave(T2)) -> T2: signature part is the list unit, (k2,t) |-> k2.
inline TableMorphism tbl_counit(const Infomorphism& fg, const Table& t2) {
  auto graved = grave_image(fg, t2);
  auto source = tbl_acute(fg, graved.table);
  auto h = list_unit(fg.sort_fn, t2.signature());
  auto k = graved.origin;
  return TableMorphism(source, t2, SignedDomainMorphism::over(fg.source, h), SetFn(source.keys, t2.keys, std::move(k)));
}

inline Functor<TblA, TblA> tbl_acute_passage(const Infomorphism& fg) {
  return {TblA(fg.target), TblA(fg.source), [fg](const Table& t) { return tbl_acute(fg, t); },
          [fg](const TableMorphism& m) { return tbl_acute(fg, m); }};
}

// Object images are memoized: hom-set sweeps map many morphisms between the same few tables.
inline Functor<TblA, TblA> tbl_grave_passage(const Infomorphism& fg) {
  using Entry = std::pair<Table, std::shared_ptr<const GraveImage>>;
  auto memo = std::make_shared<std::vector<Entry>>();
  auto image = [fg, memo](const Table& t) {
    for (const auto& [from, to] : *memo)
      if (from == t) return to;
    if (memo->size() >= 8) memo->erase(memo->begin());
    memo->emplace_back(t, std::make_shared<const GraveImage>(grave_image(fg, t)));
    return memo->back().second;
  };
  return {TblA(fg.source), TblA(fg.target), [image](const Table& t) { return image(t)->table; },
          [fg, image](const TableMorphism& m) {
            auto src = image(m.source);
            auto tgt = image(m.target);
            return tbl_grave(fg, m, *src, tgt->table);
          }};
}

// unit(T1);grave(f) for f: acute(T1) -> T2, computed on the keys of T1 only.
inline TableMorphism tbl_transpose_right(const Infomorphism& fg, const Table& t1, const TableMorphism& f, const Table& grave_t2) {
  if (!(f.source == tbl_acute(fg, t1))) fail(Errc::NonComposablePair, "transpose: morphism does not start at acute(T1)");
  auto hc = list_counit(fg.sort_fn, t1.signature());
  const auto& hf = f.domain_map.signature_map;
  std::map<Id, Id> k;
  for (const auto& [key, row] : t1.rows) k[key] = grave_key(f.key_map(key), restrict(hf, restrict(hc, row)));
  auto dm = compose(SignedDomainMorphism::over(fg.target, sigma_f(fg.sort_fn, hf)), SignedDomainMorphism::over(fg.target, hc));
  return TableMorphism(t1, grave_t2, dm, SetFn(t1.keys, grave_t2.keys, std::move(k)));
}

inline AdjunctionWitness<TblA, TblA> tbl_fiber_adjunction(const Infomorphism& fg) {
  auto grave = tbl_grave_passage(fg);
  return {tbl_acute_passage(fg), grave, [fg](const Table& t) { return tbl_unit(fg, t); },
          [fg](const Table& t) { return tbl_counit(fg, t); },
          [fg, grave](const Table& t1, const TableMorphism& f) { return tbl_transpose_right(fg, t1, f, grave(f.target)); }};
}

// Tuple bridges: at S1, tup_A1(S1) -> tup_A2(f^* S1); at S2, tup_A1(Sigma_f S2) -> tup_A2(S2).
inline Tuple tau_acute(const Infomorphism& fg, const Signature& s1, const Tuple& t) {
  Tuple u;
  for (const auto& [i, x] : s1.sort)
    for (const auto& x2 : fg.sort_fn.domain)
      if (fg.sort_fn(x2) == x) u[pulled_index(i, x2)] = fg.value_fn(lookup(t, i, "tuple"));
  return u;
}

inline Tuple tau_grave(const Infomorphism& fg, const Signature& s2, const Tuple& t) {
  Tuple u;
  for (const auto& i : s2.arity) u[i] = fg.value_fn(lookup(t, i, "tuple"));
  return u;
}

// Signed-domain inclusion bridges.
// At S2: (S2, A2) -> (Sigma_f S2, A1), identity on indices.
inline SignedDomainMorphism iota_acute(const Infomorphism& fg, const Signature& s2) {
  auto s1 = sigma_f(fg.sort_fn, s2);
  return SignedDomainMorphism(SignatureMorphism(s2, s1, SetFn::identity(s2.arity), fg.sort_fn), fg);
}

// At S1: (f^* S1, A2) -> (S1, A1), (i,x2) |-> i.
inline SignedDomainMorphism iota_grave(const Infomorphism& fg, const Signature& s1) {
  auto s2 = f_star(fg.sort_fn, s1);
  std::map<Id, Id> h;
  for (const auto& i : s1.arity)
    for (const auto& x2 : fg.sort_fn.domain)
      if (fg.sort_fn(x2) == s1.sort_of(i)) h[pulled_index(i, x2)] = i;
  return SignedDomainMorphism(SignatureMorphism(s2, s1, SetFn(s2.arity, s1.arity, std::move(h)), fg.sort_fn), fg);
}

// Table inclusion bridges in Tbl.
// At T1: T1 -> acute(T1), domain part iota_grave, identity on keys.
inline TableMorphism chi_acute(const Infomorphism& fg, const Table& t1) {
  return TableMorphism(t1, tbl_acute(fg, t1), iota_grave(fg, t1.signature()), SetFn::identity(t1.keys));
}

// At T2: grave(T2) -> T2, domain part iota_acute, (k2,t) |-> k2.
inline TableMorphism chi_grave(const Infomorphism& fg, const Table& t2) {
  auto graved = grave_image(fg, t2);
  return TableMorphism(graved.table, t2, iota_acute(fg, t2.signature()), SetFn(graved.table.keys, t2.keys, graved.origin));
}

inline Functor<ListX, DomCat> list_inclusion(const TypeDomain& a) {
  return {ListX(a.sorts), DomCat{}, [a](const Signature& s) { return SignedDomain(s, a); },
          [a](const SignatureMorphism& h) { return SignedDomainMorphism::over(a, h); }};
}

}  // namespace fole
