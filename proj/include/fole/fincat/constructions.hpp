#pragma once

#include <functional>
#include <iterator>
#include <map>
#include <type_traits>
#include <vector>

#include "fole/fincat/passage.hpp"

namespace fole {

template <Category E>
using HomEnumerator = std::function<std::vector<typename E::Morphism>(const typename E::Object&, const typename E::Object&)>;

struct SpanOfCategories {
  FinCategory apex;
  Passage<FinCategory> left, right;
};

// Objects (c1,c2) with F(c1) = G(c2); morphisms (f1,f2) with F(f1) = G(f2).
template <Category E>
SpanOfCategories pullback_category(const Passage<E>& f, const Passage<E>& g) {
  const auto& c1 = f.source();
  const auto& c2 = g.source();
  std::vector<Id> objs;
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident, lo, ro, lm, rm;
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& x : c1.objects())
    for (const auto& y : c2.objects())
      if (f.object(x) == g.object(y)) {
        Id p = pair_id(x, y);
        objs.push_back(p);
        ident[p] = pair_id(c1.identity(x), c2.identity(y));
        lo[p] = x;
        ro[p] = y;
      }
  std::vector<std::pair<MorphismDecl, MorphismDecl>> pairs;
  for (const auto& a : c1.morphisms())
    for (const auto& b : c2.morphisms())
      if (f.morphism(a.id) == g.morphism(b.id)) {
        Id p = pair_id(a.id, b.id);
        mors.push_back({p, pair_id(a.source, b.source), pair_id(a.target, b.target)});
        lm[p] = a.id;
        rm[p] = b.id;
        pairs.push_back({a, b});
      }
  for (const auto& [a1, b1] : pairs)
    for (const auto& [a2, b2] : pairs)
      if (a1.target == a2.source && b1.target == b2.source)
        comp[{pair_id(a1.id, b1.id), pair_id(a2.id, b2.id)}] = pair_id(c1.compose(a1.id, a2.id), c2.compose(b1.id, b2.id));
  FinCategory apex = FinCategory::make(objs, mors, ident, comp);
  return {apex, Passage<FinCategory>(apex, c1, lo, lm), Passage<FinCategory>(apex, c2, ro, rm)};
}

template <Category E>
struct CommaCategory {
  FinCategory category;
  Passage<FinCategory> left, right;
  std::map<Id, typename E::Morphism> arrow;  // the E-morphism F(c) -> G(d) carried by each object
};

template <Category E>
Id morphism_label(const typename E::Morphism& m, std::size_t index) {
  if constexpr (std::is_same_v<E, FinCategory>)
    return m;
  else
    return std::to_string(index);
}

// Objects (c,d,e: F(c) -> G(d)); morphisms (f,g) with e;G(g) = F(f);e'.
template <Category E>
CommaCategory<E> comma_category(const Passage<E>& f, const Passage<E>& g, const HomEnumerator<E>& homs) {
  if (!homs) fail(Errc::HomEnumerationUnavailable, "comma_category needs a hom-set enumerator for the ambient category");
  const auto& cat = f.target();
  struct Obj {
    Id id, c, d;
    typename E::Morphism e;
  };
  std::vector<Obj> objs;
  for (const auto& c : f.source().objects())
    for (const auto& d : g.source().objects()) {
      auto hs = homs(f.object(c), g.object(d));
      for (std::size_t n = 0; n < hs.size(); ++n)
        objs.push_back({tuple_id({c, d, morphism_label<E>(hs[n], n)}), c, d, hs[n]});
    }
  std::vector<Id> oids;
  std::map<Id, Id> ident, lo, ro, lm, rm;
  std::map<Id, typename E::Morphism> arrow;
  std::map<Id, std::size_t> index;
  for (std::size_t n = 0; n < objs.size(); ++n) {
    oids.push_back(objs[n].id);
    index[objs[n].id] = n;
    arrow.emplace(objs[n].id, objs[n].e);
    lo[objs[n].id] = objs[n].c;
    ro[objs[n].id] = objs[n].d;
  }
  struct Mor {
    Id id;
    std::size_t s, t;
    Id f, g;
  };
  std::vector<Mor> mors;
  for (std::size_t s = 0; s < objs.size(); ++s)
    for (std::size_t t = 0; t < objs.size(); ++t)
      for (const auto& a : f.source().hom(objs[s].c, objs[t].c))
        for (const auto& b : g.source().hom(objs[s].d, objs[t].d))
          if (cat.compose(objs[s].e, g.morphism(b)) == cat.compose(f.morphism(a), objs[t].e))
            mors.push_back({tuple_id({objs[s].id, a, b, objs[t].id}), s, t, a, b});
  std::vector<MorphismDecl> decls;
  std::map<std::pair<std::size_t, std::pair<Id, Id>>, Id> by_parts;
  for (const auto& m : mors) {
    decls.push_back({m.id, objs[m.s].id, objs[m.t].id});
    lm[m.id] = m.f;
    rm[m.id] = m.g;
    by_parts[{m.s, {m.f, m.g}}] = m.id;
  }
  for (const auto& o : objs) ident[o.id] = tuple_id({o.id, f.source().identity(o.c), g.source().identity(o.d), o.id});
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& m1 : mors)
    for (const auto& m2 : mors) {
      if (m1.t != m2.s) continue;
      Id a = f.source().compose(m1.f, m2.f), b = g.source().compose(m1.g, m2.g);
      comp[{m1.id, m2.id}] = tuple_id({objs[m1.s].id, a, b, objs[m2.t].id});
    }
  FinCategory cc = FinCategory::make(oids, decls, ident, comp);
  return {cc, Passage<FinCategory>(cc, f.source(), lo, lm), Passage<FinCategory>(cc, g.source(), ro, rm), arrow};
}

template <Category E>
HomEnumerator<E> default_homs(const E&) {
  return {};
}

inline HomEnumerator<FinCategory> default_homs(const FinCategory& c) {
  return [c](const Id& x, const Id& y) { return c.hom(x, y); };
}

// A finite full subcategory of a locally computable category, named by the caller.
template <Category E>
struct FiniteModel {
  FinCategory category;
  E ambient;
  std::map<Id, typename E::Object> objects;
  std::map<Id, typename E::Morphism> morphisms;

  Id object_id(const typename E::Object& o) const {
    for (const auto& [id, v] : objects)
      if (v == o) return id;
    fail(Errc::UnknownId, "object is not in the finite model");
  }
  Id morphism_id(const typename E::Morphism& m) const {
    for (const auto& [id, v] : morphisms)
      if (v == m) return id;
    fail(Errc::UnknownId, "morphism is not in the finite model");
  }
};

template <Category E>
FiniteModel<E> full_subcategory(const E& ambient, const std::map<Id, typename E::Object>& objects, const HomEnumerator<E>& homs) {
  if (!homs) fail(Errc::HomEnumerationUnavailable, "full_subcategory needs a hom-set enumerator");
  FiniteModel<E> out{FinCategory(), ambient, objects, {}};
  for (auto a = objects.begin(); a != objects.end(); ++a)
    for (auto b = std::next(a); b != objects.end(); ++b)
      if (a->second == b->second) fail(Errc::UnknownId, "objects '" + a->first + "' and '" + b->first + "' are equal");
  std::vector<MorphismDecl> decls;
  std::map<Id, Id> ident;
  for (const auto& [x, vx] : objects)
    for (const auto& [y, vy] : objects) {
      auto hs = homs(vx, vy);
      for (std::size_t n = 0; n < hs.size(); ++n) {
        Id id = tuple_id({x, y, std::to_string(n)});
        if (x == y && hs[n] == ambient.identity(vx)) id = "id_" + x;
        out.morphisms.emplace(id, hs[n]);
        decls.push_back({id, x, y});
      }
    }
  for (const auto& [x, vx] : objects) {
    Id want = "id_" + x;
    if (!out.morphisms.count(want)) fail(Errc::HomEnumerationUnavailable, "enumerator omitted the identity of '" + x + "'");
    ident[x] = want;
  }
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& d1 : decls)
    for (const auto& d2 : decls) {
      if (d1.target != d2.source) continue;
      auto c = ambient.compose(out.morphisms.at(d1.id), out.morphisms.at(d2.id));
      bool found = false;
      for (const auto& [id, v] : out.morphisms)
        if (v == c && out.objects.at(d1.source) == ambient.source(v) && ambient.target(v) == out.objects.at(d2.target)) {
          comp[{d1.id, d2.id}] = id;
          found = true;
          break;
        }
      if (!found) fail(Errc::HomEnumerationUnavailable, "enumerator is not closed under composition");
    }
  out.category = FinCategory::make([&] {
    std::vector<Id> v;
    for (const auto& [x, o] : objects) v.push_back(x);
    return v;
  }(), decls, ident, comp);
  return out;
}

// Every passage C -> D between finite categories, by backtracking over object images then morphism images.
template <class Visit>
void for_each_passage(const FinCategory& c, const FinCategory& d, Visit&& visit) {
  const auto& objs = c.objects();
  std::vector<const MorphismDecl*> mors;
  for (const auto& m : c.morphisms())
    if (!c.is_identity(m.id)) mors.push_back(&m);
  std::map<Id, Id> o, m;
  auto consistent = [&](const MorphismDecl& f) {
    for (const auto& g : c.morphisms()) {
      if (!m.count(g.id)) continue;
      if (f.target == g.source) {
        auto fg = c.compose(f.id, g.id);
        if (m.count(fg) && d.compose(m.at(f.id), m.at(g.id)) != m.at(fg)) return false;
      }
      if (g.target == f.source) {
        auto gf = c.compose(g.id, f.id);
        if (m.count(gf) && d.compose(m.at(g.id), m.at(f.id)) != m.at(gf)) return false;
      }
    }
    for (const auto& g : c.morphisms())
      for (const auto& h : c.morphisms()) {
        if (g.target != h.source || !m.count(g.id) || !m.count(h.id)) continue;
        if (c.compose(g.id, h.id) == f.id && d.compose(m.at(g.id), m.at(h.id)) != m.at(f.id)) return false;
      }
    return true;
  };
  auto on_mor = [&](auto&& self, std::size_t n) -> void {
    if (n == mors.size()) {
      visit(Passage<FinCategory>(c, d, o, m));
      return;
    }
    const auto& f = *mors[n];
    for (const auto& g : d.hom(o.at(f.source), o.at(f.target))) {
      m[f.id] = g;
      if (consistent(f)) self(self, n + 1);
      m.erase(f.id);
    }
  };
  auto on_obj = [&](auto&& self, std::size_t n) -> void {
    if (n == objs.size()) {
      for (const auto& x : objs) m[c.identity(x)] = d.identity(o.at(x));
      on_mor(on_mor, 0);
      for (const auto& x : objs) m.erase(c.identity(x));
      return;
    }
    for (const auto& y : d.objects()) {
      o[objs[n]] = y;
      self(self, n + 1);
    }
    o.erase(objs[n]);
  };
  on_obj(on_obj, 0);
}

inline std::vector<Passage<FinCategory>> all_passages(const FinCategory& c, const FinCategory& d) {
  std::vector<Passage<FinCategory>> out;
  for_each_passage(c, d, [&](Passage<FinCategory> p) { out.push_back(std::move(p)); });
  return out;
}

// The preorder category with one morphism (x,y) whenever leq(x,y); leq must be reflexive and transitive.
template <class Leq>
FinCategory preorder_category(const std::vector<Id>& elements, Leq&& leq) {
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident;
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& x : elements) {
    if (!leq(x, x)) fail(Errc::IdentityLawViolation, "order is not reflexive at '" + x + "'");
    ident[x] = pair_id(x, x);
    for (const auto& y : elements)
      if (leq(x, y)) mors.push_back({pair_id(x, y), x, y});
  }
  for (const auto& x : elements)
    for (const auto& y : elements)
      for (const auto& z : elements)
        if (leq(x, y) && leq(y, z)) {
          if (!leq(x, z)) fail(Errc::NonComposablePair, "order is not transitive at '" + x + "', '" + y + "', '" + z + "'");
          comp[{pair_id(x, y), pair_id(y, z)}] = pair_id(x, z);
        }
  return FinCategory::make(elements, mors, ident, comp);
}

// The passage between preorders induced by a monotone object map.
inline Passage<FinCategory> monotone_passage(const FinCategory& p, const FinCategory& q, const std::map<Id, Id>& f) {
  std::map<Id, Id> m;
  for (const auto& u : p.morphisms()) {
    const auto& hs = q.hom(lookup(f, u.source, "monotone map"), lookup(f, u.target, "monotone map"));
    if (hs.empty()) fail(Errc::FunctorialityViolation, "map is not monotone on '" + u.id + "'");
    m[u.id] = hs.front();
  }
  return Passage<FinCategory>(p, q, f, m);
}

}  // namespace fole
