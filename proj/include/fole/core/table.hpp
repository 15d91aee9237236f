#pragma once

#include <map>
#include <string>
#include <vector>

#include "fole/core/signature.hpp"
#include "fole/core/type_domain.hpp"
#include "fole/fincat/passage.hpp"

namespace fole {

using Tuple = std::map<Id, Id>;

inline std::string tuple_text(const Tuple& t) {
  std::vector<Id> parts;
  for (const auto& [i, v] : t) parts.push_back(i + "=" + v);
  return tuple_id(parts);
}

struct SignedDomain {
  Signature signature;
  TypeDomain types;

  SignedDomain() = default;
  SignedDomain(Signature s, TypeDomain a) : signature(std::move(s)), types(std::move(a)) {
    if (!(signature.sorts == types.sorts))
      fail(Errc::SortConditionViolation, "signature and type domain have different sort sets");
  }

  bool admits(const Tuple& t) const {
    if (t.size() != signature.arity.size()) return false;
    for (const auto& [i, v] : t) {
      if (!signature.arity.contains(i)) return false;
      if (!types.holds(v, signature.sort_of(i))) return false;
    }
    return true;
  }

  friend bool operator==(const SignedDomain&, const SignedDomain&) = default;
};

// <h,f,g>: D2 -> D1; the infomorphism's sort function must be the signature morphism's.
struct SignedDomainMorphism {
  SignatureMorphism signature_map;
  Infomorphism type_map;

  SignedDomainMorphism() = default;
  SignedDomainMorphism(SignatureMorphism h, Infomorphism fg) : signature_map(std::move(h)), type_map(std::move(fg)) {
    if (!(signature_map.sort_map == type_map.sort_fn))
      fail(Errc::SortConditionViolation, "signature morphism and infomorphism disagree on sorts");
  }

  static SignedDomainMorphism identity(const SignedDomain& d) {
    return SignedDomainMorphism(SignatureMorphism::identity(d.signature), Infomorphism::identity(d.types));
  }
  // Fixed type domain: identity on sorts and values.
  static SignedDomainMorphism over(const TypeDomain& a, const SignatureMorphism& h) {
    return SignedDomainMorphism(h, Infomorphism::identity(a));
  }

  SignedDomain source() const { return SignedDomain(signature_map.source, type_map.source); }
  SignedDomain target() const { return SignedDomain(signature_map.target, type_map.target); }

  friend bool operator==(const SignedDomainMorphism&, const SignedDomainMorphism&) = default;
};

inline SignedDomainMorphism compose(const SignedDomainMorphism& a, const SignedDomainMorphism& b) {
  return SignedDomainMorphism(compose(a.signature_map, b.signature_map), compose(a.type_map, b.type_map));
}

class DomCat {
 public:
  using Object = SignedDomain;
  using Morphism = SignedDomainMorphism;
  Morphism identity(const Object& d) const { return SignedDomainMorphism::identity(d); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return fole::compose(a, b); }
  Object source(const Morphism& m) const { return m.source(); }
  Object target(const Morphism& m) const { return m.target(); }
  friend bool operator==(const DomCat&, const DomCat&) { return true; }
};

// { t: I -> Y | t(i) is of sort s(i) }, in lexicographic order.
inline std::vector<Tuple> tup_set(const SignedDomain& d) {
  const auto& is = d.signature.arity.elements();
  std::vector<std::vector<Id>> choices;
  for (const auto& i : is) {
    auto ext = d.types.extent(d.signature.sort_of(i));
    if (ext.empty()) return {};
    choices.push_back(ext.elements());
  }
  std::vector<Tuple> out;
  std::vector<std::size_t> idx(is.size(), 0);
  while (true) {
    Tuple t;
    for (std::size_t n = 0; n < is.size(); ++n) t[is[n]] = choices[n][idx[n]];
    out.push_back(std::move(t));
    std::size_t n = is.size();
    while (n > 0 && ++idx[n - 1] == choices[n - 1].size()) idx[--n] = 0;
    if (n == 0) return out;
  }
}

// tup(D1) -> tup(D2): t1 |-> (i2 |-> g(t1(h(i2)))).
inline Tuple tup_fn(const SignedDomainMorphism& m, const Tuple& t1) {
  Tuple t2;
  for (const auto& i2 : m.signature_map.source.arity) {
    auto it = t1.find(m.signature_map(i2));
    if (it == t1.end()) fail(Errc::SortConditionViolation, "tuple lacks index '" + m.signature_map(i2) + "'");
    t2[i2] = m.type_map.value_fn(it->second);
  }
  return t2;
}

// Fixed type domain restriction along an X-sorted signature morphism.
inline Tuple restrict(const SignatureMorphism& h, const Tuple& t1) {
  Tuple t2;
  for (const auto& i2 : h.source.arity) t2[i2] = lookup(t1, h(i2), "tuple");
  return t2;
}

struct Table {
  SignedDomain domain;
  FinSet keys;
  std::map<Id, Tuple> rows;

  Table() = default;
  Table(SignedDomain d, FinSet k, std::map<Id, Tuple> t) : domain(std::move(d)), keys(std::move(k)), rows(std::move(t)) {
    if (rows.size() != keys.size()) fail(Errc::InvalidTable, "tuple map is not total on the keys");
    for (const auto& [k_, t_] : rows) {
      if (!keys.contains(k_)) fail(Errc::InvalidTable, "row for undeclared key '" + k_ + "'");
      if (!domain.admits(t_)) fail(Errc::InvalidTable, "tuple of key '" + k_ + "' is not in tup(D)");
    }
  }

  const Signature& signature() const { return domain.signature; }
  const TypeDomain& types() const { return domain.types; }
  const Tuple& row(const Id& k) const { return lookup(rows, k, "table rows"); }

  friend bool operator==(const Table&, const Table&) = default;
};

// T1 -> T2: key map K1 -> K2 and a signed-domain morphism D2 -> D1, with k;t2 = t1;tup(h).
struct TableMorphism {
  Table source, target;
  SignedDomainMorphism domain_map;
  SetFn key_map;

  TableMorphism() = default;
  TableMorphism(Table t1, Table t2, SignedDomainMorphism h, SetFn k)
      : source(std::move(t1)), target(std::move(t2)), domain_map(std::move(h)), key_map(std::move(k)) {
    if (!(domain_map.source() == target.domain) || !(domain_map.target() == source.domain))
      fail(Errc::InvalidTable, "domain map must run from the target's signed domain to the source's");
    if (!(key_map.domain == source.keys) || !(key_map.codomain == target.keys))
      fail(Errc::InvalidTable, "key map endpoints do not match the tables");
    for (const auto& k1 : source.keys)
      if (target.row(key_map(k1)) != tup_fn(domain_map, source.row(k1)))
        fail(Errc::InvalidTable, "tuple condition fails at key '" + k1 + "'");
  }

  // Morphism in Tbl(A) given an X-sorted h: S2 -> S1 and k: K1 -> K2.
  static TableMorphism over(const Table& t1, const Table& t2, const std::map<Id, Id>& h, const std::map<Id, Id>& k) {
    auto sh = SignatureMorphism::sorted(t2.signature(), t1.signature(), h);
    return TableMorphism(t1, t2, SignedDomainMorphism::over(t1.types(), sh), SetFn(t1.keys, t2.keys, k));
  }

  static TableMorphism identity(const Table& t) {
    return TableMorphism(t, t, SignedDomainMorphism::identity(t.domain), SetFn::identity(t.keys));
  }

  friend bool operator==(const TableMorphism&, const TableMorphism&) = default;
};

inline TableMorphism compose(const TableMorphism& a, const TableMorphism& b) {
  if (!(a.target == b.source)) fail(Errc::NonComposablePair, "table morphisms do not compose");
  return TableMorphism(a.source, b.target, compose(b.domain_map, a.domain_map), compose(a.key_map, b.key_map));
}

// Tables over one fixed type domain.
class TblA {
 public:
  using Object = Table;
  using Morphism = TableMorphism;

  TblA() = default;
  explicit TblA(TypeDomain a) : types_(std::move(a)) {}

  const TypeDomain& types() const { return types_; }
  bool contains(const Table& t) const { return t.types() == types_; }
  bool contains(const TableMorphism& m) const {
    return contains(m.source) && contains(m.target) && m.domain_map.type_map == Infomorphism::identity(types_);
  }

  Morphism identity(const Object& t) const { return TableMorphism::identity(t); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return fole::compose(a, b); }
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }

  friend bool operator==(const TblA&, const TblA&) = default;

 private:
  TypeDomain types_;
};

class TblCat {
 public:
  using Object = Table;
  using Morphism = TableMorphism;
  Morphism identity(const Object& t) const { return TableMorphism::identity(t); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return fole::compose(a, b); }
  const Object& source(const Morphism& m) const { return m.source; }
  const Object& target(const Morphism& m) const { return m.target; }
  friend bool operator==(const TblCat&, const TblCat&) { return true; }
};

// Projections of a table and of a table morphism.
inline const FinSet& key(const Table& t) { return t.keys; }
inline const SetFn& key(const TableMorphism& m) { return m.key_map; }
inline const Signature& sign(const Table& t) { return t.domain.signature; }
inline const SignatureMorphism& sign(const TableMorphism& m) { return m.domain_map.signature_map; }
inline const TypeDomain& data(const Table& t) { return t.domain.types; }
inline const Infomorphism& data(const TableMorphism& m) { return m.domain_map.type_map; }
inline const SignedDomain& dom(const Table& t) { return t.domain; }
inline const SignedDomainMorphism& dom(const TableMorphism& m) { return m.domain_map; }

// Terminal table over a type domain: empty signature, one key, empty tuple.
inline Table terminal_table(const TypeDomain& a, const Id& key_id = "()") {
  return Table(SignedDomain(Signature(FinSet{}, {}, a.sorts), a), FinSet{key_id}, {{key_id, Tuple{}}});
}

inline Functor<TblA, SetCat> key_functor(const TblA& c) {
  return {c, SetCat{}, [](const Table& t) { return t.keys; }, [](const TableMorphism& m) { return m.key_map; }};
}

inline Functor<TblA, TblCat> table_inclusion(const TblA& c) { return {c, TblCat{}, [](const Table& t) { return t; }, [](const TableMorphism& m) { return m; }}; }

// Enumerates hom_{Tbl(A)}(t1, t2): X-sorted h: S2 -> S1, then key maps chosen per key.
template <class Visit>
void for_each_table_morphism(const Table& t1, const Table& t2, Visit&& visit) {
  if (!(t1.types() == t2.types())) return;
  const auto& ks = t1.keys.elements();
  for_each_sorted_morphism(t2.signature(), t1.signature(), [&](const SignatureMorphism& h) {
    std::vector<std::vector<Id>> choices;
    for (const auto& k1 : ks) {
      Tuple want = restrict(h, t1.row(k1));
      std::vector<Id> c;
      for (const auto& [k2, row] : t2.rows)
        if (row == want) c.push_back(k2);
      if (c.empty()) return;
      choices.push_back(std::move(c));
    }
    auto dm = SignedDomainMorphism::over(t1.types(), h);
    std::vector<std::size_t> idx(ks.size(), 0);
    while (true) {
      std::map<Id, Id> k;
      for (std::size_t n = 0; n < ks.size(); ++n) k[ks[n]] = choices[n][idx[n]];
      visit(TableMorphism(t1, t2, dm, SetFn(t1.keys, t2.keys, std::move(k))));
      std::size_t n = 0;
      while (n < idx.size() && ++idx[n] == choices[n].size()) idx[n++] = 0;
      if (n == idx.size()) return;
    }
  });
}

inline std::vector<TableMorphism> table_morphisms(const Table& t1, const Table& t2) {
  std::vector<TableMorphism> out;
  for_each_table_morphism(t1, t2, [&](TableMorphism m) { out.push_back(std::move(m)); });
  return out;
}

}  // namespace fole
