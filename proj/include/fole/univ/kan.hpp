#pragma once

#include <functional>
#include <map>
#include <vector>

#include "fole/core/adjunction.hpp"
#include "fole/fincat/constructions.hpp"
#include "fole/univ/list_limits.hpp"
#include "fole/univ/set_limits.hpp"

namespace fole {

template <Category V>
using UniversalFn = std::function<LimitResult<V>(const Passage<V>&)>;

// lan: bridge is the unit S => K;L and factor(S1, a: S => K;S1) is the unique b: L => S1 with a = unit;(K b).
// ran: bridge is the counit K;R => S and factor(S1, a: K;S1 => S) is the unique b: S1 => R with a = (K b);counit.
template <Category V>
struct KanExtension {
  Passage<V> extension;
  Bridge<V> bridge;
  std::function<Bridge<V>(const Passage<V>&, const Bridge<V>&)> factor;
};

// The passage picking out one object.
inline Passage<FinCategory> point(const FinCategory& c, const Id& x) {
  auto t = terminal_category();
  return Passage<FinCategory>(t, c, {{"*", x}}, {{t.identity("*"), c.identity(x)}});
}

// Pointwise: L(c1) is the colimit of S over the comma category (K | c1).
template <Category V>
KanExtension<V> left_kan(const Passage<FinCategory>& k, const Passage<V>& s, const UniversalFn<V>& colim) {
  const auto& c1 = k.target();
  const auto& c2 = k.source();
  std::map<Id, CommaCategory<FinCategory>> commas;
  std::map<Id, LimitResult<V>> cols;
  for (const auto& x : c1.objects()) {
    auto cm = comma_category(k, point(c1, x), default_homs(c1));
    cols.emplace(x, colim(compose_passages(cm.left, s)));
    commas.emplace(x, std::move(cm));
  }
  auto at = [](const Id& c, const Id& e) { return tuple_id({c, "*", e}); };
  std::map<Id, typename V::Object> o;
  std::map<Id, typename V::Morphism> m;
  for (const auto& x : c1.objects()) o.emplace(x, cols.at(x).vertex());
  for (const auto& g : c1.morphisms()) {
    const auto& cm = commas.at(g.source);
    std::map<Id, typename V::Morphism> legs;
    for (const auto& y : cm.category.objects())
      legs.emplace(y, cols.at(g.target).cone.leg(at(cm.left.object(y), c1.compose(cm.arrow.at(y), g.id))));
    const auto& from = cols.at(g.source);
    m.emplace(g.id, from.mediator(Cone<V>{from.cone.diagram, o.at(g.target), std::move(legs), ConeKind::Colimit}));
  }
  Passage<V> ext(c1, s.target(), o, m);
  std::map<Id, typename V::Morphism> eta;
  for (const auto& c : c2.objects()) eta.emplace(c, cols.at(k.object(c)).cone.leg(at(c, c1.identity(k.object(c)))));
  Bridge<V> unit(s, compose_passages(k, ext), std::move(eta));
  auto factor = [commas, cols, ext, c1](const Passage<V>& s1, const Bridge<V>& a) {
    std::map<Id, typename V::Morphism> b;
    for (const auto& x : c1.objects()) {
      const auto& cm = commas.at(x);
      std::map<Id, typename V::Morphism> legs;
      for (const auto& y : cm.category.objects())
        legs.emplace(y, s1.target().compose(a.at(cm.left.object(y)), s1.morphism(cm.arrow.at(y))));
      const auto& r = cols.at(x);
      b.emplace(x, r.mediator(Cone<V>{r.cone.diagram, s1.object(x), std::move(legs), ConeKind::Colimit}));
    }
    return Bridge<V>(ext, s1, std::move(b));
  };
  return {ext, unit, factor};
}

// Pointwise: R(c1) is the limit of S over the comma category (c1 | K).
template <Category V>
KanExtension<V> right_kan(const Passage<FinCategory>& k, const Passage<V>& s, const UniversalFn<V>& lim) {
  const auto& c1 = k.target();
  const auto& c2 = k.source();
  std::map<Id, CommaCategory<FinCategory>> commas;
  std::map<Id, LimitResult<V>> lims;
  for (const auto& x : c1.objects()) {
    auto cm = comma_category(point(c1, x), k, default_homs(c1));
    lims.emplace(x, lim(compose_passages(cm.right, s)));
    commas.emplace(x, std::move(cm));
  }
  auto at = [](const Id& c, const Id& e) { return tuple_id({"*", c, e}); };
  std::map<Id, typename V::Object> o;
  std::map<Id, typename V::Morphism> m;
  for (const auto& x : c1.objects()) o.emplace(x, lims.at(x).vertex());
  for (const auto& g : c1.morphisms()) {
    const auto& cm = commas.at(g.target);
    std::map<Id, typename V::Morphism> legs;
    for (const auto& y : cm.category.objects())
      legs.emplace(y, lims.at(g.source).cone.leg(at(cm.right.object(y), c1.compose(g.id, cm.arrow.at(y)))));
    const auto& to = lims.at(g.target);
    m.emplace(g.id, to.mediator(Cone<V>{to.cone.diagram, o.at(g.source), std::move(legs), ConeKind::Limit}));
  }
  Passage<V> ext(c1, s.target(), o, m);
  std::map<Id, typename V::Morphism> eps;
  for (const auto& c : c2.objects()) eps.emplace(c, lims.at(k.object(c)).cone.leg(at(c, c1.identity(k.object(c)))));
  Bridge<V> counit(compose_passages(k, ext), s, std::move(eps));
  auto factor = [commas, lims, ext, c1](const Passage<V>& s1, const Bridge<V>& a) {
    std::map<Id, typename V::Morphism> b;
    for (const auto& x : c1.objects()) {
      const auto& cm = commas.at(x);
      std::map<Id, typename V::Morphism> legs;
      for (const auto& y : cm.category.objects())
        legs.emplace(y, s1.target().compose(s1.morphism(cm.arrow.at(y)), a.at(cm.right.object(y))));
      const auto& r = lims.at(x);
      b.emplace(x, r.mediator(Cone<V>{r.cone.diagram, s1.object(x), std::move(legs), ConeKind::Limit}));
    }
    return Bridge<V>(s1, ext, std::move(b));
  };
  return {ext, counit, factor};
}

inline KanExtension<SetCat> lan(const Passage<FinCategory>& k, const Passage<SetCat>& s) {
  return left_kan<SetCat>(k, s, colimit_in_set);
}
inline KanExtension<SetCat> ran(const Passage<FinCategory>& k, const Passage<SetCat>& s) {
  return right_kan<SetCat>(k, s, limit_in_set);
}

// X-sorted signatures form the slice of Set over X, so their Kan extensions are computed by the same pointwise formula.
inline KanExtension<ListX> lan_listX(const Passage<FinCategory>& k, const Passage<ListX>& s) {
  return left_kan<ListX>(k, s, colimit_in_listX);
}
inline KanExtension<ListX> ran_listX(const Passage<FinCategory>& k, const Passage<ListX>& s) {
  return right_kan<ListX>(k, s, limit_in_listX);
}

// Set-valued passages on a fixed finite shape, with bridges as morphisms.
class SetFunctorCat {
 public:
  using Object = Passage<SetCat>;
  using Morphism = Bridge<SetCat>;

  SetFunctorCat() = default;
  explicit SetFunctorCat(FinCategory shape) : shape_(std::move(shape)) {}

  const FinCategory& shape() const { return shape_; }
  Morphism identity(const Object& f) const { return identity_bridge(f); }
  Morphism compose(const Morphism& a, const Morphism& b) const { return vertical_compose(a, b); }
  const Object& source(const Morphism& a) const { return a.source(); }
  const Object& target(const Morphism& a) const { return a.target(); }

  friend bool operator==(const SetFunctorCat& a, const SetFunctorCat& b) { return a.shape_ == b.shape_; }

 private:
  FinCategory shape_;
};

// Every natural transformation f => g, by backtracking over components with incremental naturality checks.
inline std::vector<Bridge<SetCat>> natural_transformations(const Passage<SetCat>& f, const Passage<SetCat>& g) {
  const auto& c = f.source();
  const auto& objs = c.objects();
  if (!(c == g.source())) fail(Errc::EndpointMismatch, "natural transformations between diagrams on different shapes");
  std::map<Id, std::size_t> index;
  for (std::size_t n = 0; n < objs.size(); ++n) index[objs[n]] = n;
  std::vector<std::vector<SetFn>> choices;
  for (const auto& x : objs) choices.push_back(all_functions(f.object(x), g.object(x)));
  // Squares that become checkable once the component at objs[n] is chosen.
  std::vector<std::vector<const MorphismDecl*>> squares(objs.size());
  for (const auto& u : c.morphisms())
    if (!c.is_identity(u.id)) squares[std::max(index.at(u.source), index.at(u.target))].push_back(&u);
  std::vector<const SetFn*> chosen(objs.size(), nullptr);
  std::vector<Bridge<SetCat>> out;
  auto rec = [&](auto&& self, std::size_t n) -> void {
    if (n == objs.size()) {
      std::map<Id, SetFn> comp;
      for (std::size_t i = 0; i < objs.size(); ++i) comp.emplace(objs[i], *chosen[i]);
      out.push_back(Bridge<SetCat>::trusted(f, g, std::move(comp)));
      return;
    }
    for (const auto& fn : choices[n]) {
      chosen[n] = &fn;
      bool natural = true;
      for (const auto* u : squares[n]) {
        const auto& a = chosen[index.at(u->source)]->map;
        const auto& b = chosen[index.at(u->target)]->map;
        const auto& gu = g.morphism(u->id).map;
        for (const auto& [x, y] : f.morphism(u->id).map)
          if (b.at(y) != gu.at(a.at(x))) {
            natural = false;
            break;
          }
        if (!natural) break;
      }
      if (natural) self(self, n + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// Precomposition with K: functors on C1 to functors on C2.
inline Functor<SetFunctorCat, SetFunctorCat> restriction_functor(const Passage<FinCategory>& k) {
  return {SetFunctorCat(k.target()), SetFunctorCat(k.source()),
          [k](const Passage<SetCat>& s1) { return compose_passages(k, s1); },
          [k](const Bridge<SetCat>& b) { return whisker_left(k, b); }};
}

struct KanAdjunctions {
  AdjunctionWitness<SetFunctorCat, SetFunctorCat> left;   // lan -| restriction
  AdjunctionWitness<SetFunctorCat, SetFunctorCat> right;  // restriction -| ran
};

inline KanAdjunctions kan_adjunction(const Passage<FinCategory>& k) {
  SetFunctorCat on1(k.target()), on2(k.source());
  auto restrict = restriction_functor(k);
  Functor<SetFunctorCat, SetFunctorCat> lan_f{
      on2, on1, [k](const Passage<SetCat>& s) { return lan(k, s).extension; },
      [k](const Bridge<SetCat>& a) {
        auto from = lan(k, a.source());
        auto to = lan(k, a.target());
        return from.factor(to.extension, vertical_compose(a, to.bridge));
      }};
  Functor<SetFunctorCat, SetFunctorCat> ran_f{
      on2, on1, [k](const Passage<SetCat>& s) { return ran(k, s).extension; },
      [k](const Bridge<SetCat>& a) {
        auto from = ran(k, a.source());
        auto to = ran(k, a.target());
        return to.factor(from.extension, vertical_compose(from.bridge, a));
      }};
  AdjunctionWitness<SetFunctorCat, SetFunctorCat> left{
      lan_f, restrict, [k](const Passage<SetCat>& s) { return lan(k, s).bridge; },
      [k](const Passage<SetCat>& s1) {
        auto pulled = compose_passages(k, s1);
        return lan(k, pulled).factor(s1, identity_bridge(pulled));
      }};
  AdjunctionWitness<SetFunctorCat, SetFunctorCat> right{
      restrict, ran_f,
      [k](const Passage<SetCat>& s1) {
        auto pulled = compose_passages(k, s1);
        return ran(k, pulled).factor(s1, identity_bridge(pulled));
      },
      [k](const Passage<SetCat>& s) { return ran(k, s).bridge; }};
  return {left, right};
}

}  // namespace fole
