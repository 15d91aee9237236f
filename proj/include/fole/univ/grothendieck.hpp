#pragma once

#include <optional>
#include <map>
#include <utility>

#include "fole/core/adjunction.hpp"
#include "fole/univ/oracle.hpp"

namespace fole {

inline Functor<FinCategory, FinCategory> as_functor(const Passage<FinCategory>& p) {
  return {p.source(), p.target(), [p](const Id& x) { return p.object(x); }, [p](const Id& m) { return p.morphism(m); }};
}

// left: C_i -> C_j, right: C_j -> C_i, unit A -> right(left(A)), counit left(right(B)) -> B.
struct FiberAdjunction {
  Passage<FinCategory> left, right;
  std::map<Id, Id> unit, counit;

  AdjunctionWitness<FinCategory, FinCategory> witness() const {
    auto u = unit;
    auto c = counit;
    return {as_functor(left), as_functor(right), [u](const Id& a) { return lookup(u, a, "unit"); },
            [c](const Id& b) { return lookup(c, b, "counit"); }};
  }
};

inline FiberAdjunction identity_adjunction(const FinCategory& c) {
  std::map<Id, Id> u;
  for (const auto& x : c.objects()) u[x] = c.identity(x);
  return {identity_passage(c), identity_passage(c), u, u};
}

// first then second: left adjoints compose forwards, right adjoints backwards.
inline FiberAdjunction compose_adjunctions(const FiberAdjunction& a, const FiberAdjunction& b) {
  const auto& ci = a.left.source();
  const auto& ck = b.left.target();
  std::map<Id, Id> unit, counit;
  for (const auto& x : ci.objects())
    unit[x] = ci.compose(a.unit.at(x), a.right.morphism(b.unit.at(a.left.object(x))));
  for (const auto& z : ck.objects())
    counit[z] = ck.compose(b.left.morphism(a.counit.at(b.right.object(z))), b.counit.at(z));
  return {compose_passages(a.left, b.left), compose_passages(b.right, a.right), unit, counit};
}

// The right adjoint of a passage between finite categories, found by universal-arrow search.
inline FiberAdjunction adjunction_from_left(const Passage<FinCategory>& left) {
  const auto& ci = left.source();
  const auto& cj = left.target();
  std::map<Id, Id> ro, counit;
  auto universal = [&](const Id& r, const Id& e, const Id& b) {
    for (const auto& a : ci.objects())
      for (const auto& f : cj.hom(left.object(a), b)) {
        int count = 0;
        for (const auto& g : ci.hom(a, r))
          if (cj.compose(left.morphism(g), e) == f) ++count;
        if (count != 1) return false;
      }
    return true;
  };
  for (const auto& b : cj.objects()) {
    for (const auto& r : ci.objects()) {
      for (const auto& e : cj.hom(left.object(r), b))
        if (universal(r, e, b)) {
          ro[b] = r;
          counit[b] = e;
          break;
        }
      if (ro.count(b)) break;
    }
    if (!ro.count(b)) fail(Errc::MissingAdjunctionWitness, "passage has no right adjoint at '" + b + "'");
  }
  auto factor = [&](const Id& a, const Id& f, const Id& b) {
    for (const auto& g : ci.hom(a, ro.at(b)))
      if (cj.compose(left.morphism(g), counit.at(b)) == f) return g;
    fail(Errc::MissingAdjunctionWitness, "no transpose into '" + b + "'");
  };
  std::map<Id, Id> rm, unit;
  for (const auto& h : cj.morphisms()) rm[h.id] = factor(ro.at(h.source), cj.compose(counit.at(h.source), h.id), h.target);
  for (const auto& a : ci.objects()) unit[a] = factor(a, cj.identity(left.object(a)), left.object(a));
  return {left, Passage<FinCategory>(cj, ci, ro, rm), unit, counit};
}

// Fibers over a finite index with a left-adjoint/right-adjoint pair along every index morphism.
struct IndexedAdjunction {
  FinCategory index;
  std::map<Id, FinCategory> fibers;
  std::map<Id, FiberAdjunction> along;

  const FinCategory& fiber(const Id& i) const { return lookup(fibers, i, "fibers"); }
  const FiberAdjunction& at(const Id& a) const { return lookup(along, a, "fiber adjunctions"); }
};

// Adjunctions given on the generating arrows of a free index; identities and composites are filled in strictly.
inline IndexedAdjunction indexed_from_generators(const FinCategory& index, std::map<Id, FinCategory> fibers,
                                                 const std::map<Id, FiberAdjunction>& on_edges) {
  if (!index.is_free()) fail(Errc::StrictnessViolation, "generators need a freely generated index");
  IndexedAdjunction ix{index, std::move(fibers), {}};
  for (const auto& m : index.morphisms()) {
    const auto& path = *index.generator_path(m.id);
    auto acc = identity_adjunction(ix.fiber(m.source));
    for (const auto& e : path) acc = compose_adjunctions(acc, lookup(on_edges, e, "edge adjunctions"));
    ix.along.emplace(m.id, std::move(acc));
  }
  return ix;
}

inline CheckReport check_indexed_adjunction(const IndexedAdjunction& ix) {
  CheckReport rep;
  const auto& idx = ix.index;
  for (const auto& i : idx.objects())
    if (!ix.fibers.count(i)) rep.fail_with("no fiber over '" + i + "'");
  for (const auto& a : idx.morphisms())
    if (!ix.along.count(a.id)) rep.fail_with("no adjunction along '" + a.id + "'");
  if (!rep.ok()) return rep;
  for (const auto& a : idx.morphisms()) {
    const auto& adj = ix.at(a.id);
    const auto& ci = ix.fiber(a.source);
    const auto& cj = ix.fiber(a.target);
    if (!(adj.left.source() == ci) || !(adj.left.target() == cj) || !(adj.right.source() == cj) || !(adj.right.target() == ci)) {
      rep.fail_with("adjunction along '" + a.id + "' has wrong fibers");
      continue;
    }
    auto w = adj.witness();
    rep.merge(w.check_triangles(ci.objects(), cj.objects()), "along '" + a.id + "': ");
    for (const auto& g : ci.morphisms())
      if (ci.compose(g.id, adj.unit.at(g.target)) != ci.compose(adj.unit.at(g.source), adj.right.morphism(adj.left.morphism(g.id))))
        rep.fail_with("along '" + a.id + "': unit is not natural at '" + g.id + "'");
    for (const auto& h : cj.morphisms())
      if (cj.compose(adj.counit.at(h.source), h.id) != cj.compose(adj.left.morphism(adj.right.morphism(h.id)), adj.counit.at(h.target)))
        rep.fail_with("along '" + a.id + "': counit is not natural at '" + h.id + "'");
  }
  for (const auto& i : idx.objects()) {
    const auto& adj = ix.at(idx.identity(i));
    auto id = identity_adjunction(ix.fiber(i));
    if (!(adj.left == id.left) || !(adj.right == id.right) || adj.unit != id.unit || adj.counit != id.counit)
      rep.fail_with("adjunction along the identity of '" + i + "' is not the identity");
  }
  for (const auto& a : idx.morphisms())
    for (const auto& b : idx.morphisms()) {
      if (a.target != b.source || idx.is_identity(a.id) || idx.is_identity(b.id)) continue;
      auto want = compose_adjunctions(ix.at(a.id), ix.at(b.id));
      const auto& got = ix.at(idx.compose(a.id, b.id));
      if (!(got.left == want.left) || !(got.right == want.right) || got.unit != want.unit || got.counit != want.counit)
        rep.fail_with("adjunction along (" + a.id + "," + b.id + ") is not the strict composite");
    }
  return rep;
}

inline void require_indexed_adjunction(const IndexedAdjunction& ix) {
  auto rep = check_indexed_adjunction(ix);
  if (!rep.ok()) fail(Errc::StrictnessViolation, rep.failures.front());
}

// Fibration: <a,f> : <i,A> -> <j,B> with f: A -> along_a(B) in C_i. Opfibration: f: along_a(A) -> B in C_j.
enum class GrothConvention { Fibration, Opfibration };

// A strict indexed category: along a: i -> j runs C_j -> C_i for fibrations and C_i -> C_j for opfibrations.
struct IndexedCategory {
  FinCategory index;
  std::map<Id, FinCategory> fibers;
  std::map<Id, Passage<FinCategory>> along;
  GrothConvention convention = GrothConvention::Fibration;

  const FinCategory& fiber(const Id& i) const { return lookup(fibers, i, "fibers"); }
  const Passage<FinCategory>& at(const Id& a) const { return lookup(along, a, "reindexing passages"); }
};

inline CheckReport check_strictness(const IndexedCategory& ic) {
  CheckReport rep;
  const auto& idx = ic.index;
  bool contra = ic.convention == GrothConvention::Fibration;
  for (const auto& i : idx.objects())
    if (!ic.fibers.count(i)) rep.fail_with("no fiber over '" + i + "'");
  for (const auto& a : idx.morphisms())
    if (!ic.along.count(a.id)) rep.fail_with("no passage along '" + a.id + "'");
  if (!rep.ok()) return rep;
  for (const auto& a : idx.morphisms()) {
    const auto& p = ic.at(a.id);
    const auto& from = ic.fiber(contra ? a.target : a.source);
    const auto& to = ic.fiber(contra ? a.source : a.target);
    if (!(p.source() == from) || !(p.target() == to)) rep.fail_with("passage along '" + a.id + "' has wrong fibers");
  }
  if (!rep.ok()) return rep;
  for (const auto& i : idx.objects())
    if (!(ic.at(idx.identity(i)) == identity_passage(ic.fiber(i))))
      rep.fail_with("passage along the identity of '" + i + "' is not the identity");
  for (const auto& a : idx.morphisms())
    for (const auto& b : idx.morphisms()) {
      if (a.target != b.source || idx.is_identity(a.id) || idx.is_identity(b.id)) continue;
      auto want = contra ? compose_passages(ic.at(b.id), ic.at(a.id)) : compose_passages(ic.at(a.id), ic.at(b.id));
      if (!(ic.at(idx.compose(a.id, b.id)) == want))
        rep.fail_with("passage along (" + a.id + "," + b.id + ") is not the strict composite");
    }
  return rep;
}

inline IndexedCategory acute_part(const IndexedAdjunction& ix) {
  IndexedCategory ic{ix.index, ix.fibers, {}, GrothConvention::Opfibration};
  for (const auto& [a, adj] : ix.along) ic.along.emplace(a, adj.left);
  return ic;
}

inline IndexedCategory grave_part(const IndexedAdjunction& ix) {
  IndexedCategory ic{ix.index, ix.fibers, {}, GrothConvention::Fibration};
  for (const auto& [a, adj] : ix.along) ic.along.emplace(a, adj.right);
  return ic;
}

struct GrothendieckTotal {
  struct Parts {
    Id a, source, f, target;
  };

  IndexedCategory fibered;
  std::optional<IndexedAdjunction> ix;
  FinCategory category;
  Passage<FinCategory> projection;
  std::map<Id, std::pair<Id, Id>> object_parts;
  std::map<Id, Parts> morphism_parts;

  static Id object_id(const Id& i, const Id& a) { return pair_id(i, a); }
  static Id morphism_id(const Id& a, const Id& src, const Id& f, const Id& tgt) { return tuple_id({a, src, f, tgt}); }

  GrothConvention convention() const { return fibered.convention; }
  const FinCategory& index() const { return fibered.index; }
  const FinCategory& fiber(const Id& i) const { return fibered.fiber(i); }
  const Passage<FinCategory>& along(const Id& a) const { return fibered.at(a); }
  const IndexedAdjunction& adjunction() const {
    if (!ix) fail(Errc::MissingAdjunctionWitness, "the total was built from a one-sided indexed category");
    return *ix;
  }

  const Id& index_of(const Id& x) const { return lookup(object_parts, x, "total objects").first; }
  const Id& fiber_object(const Id& x) const { return lookup(object_parts, x, "total objects").second; }
  const Parts& parts(const Id& m) const { return lookup(morphism_parts, m, "total morphisms"); }

  // C_i -> total: A |-> <i,A>, g |-> <id_i,g>.
  Passage<FinCategory> inclusion(const Id& i) const {
    const auto& c = fiber(i);
    std::map<Id, Id> o, m;
    for (const auto& x : c.objects()) o[x] = object_id(i, x);
    for (const auto& g : c.morphisms()) m[g.id] = morphism_id(index().identity(i), g.source, g.id, g.target);
    return Passage<FinCategory>(c, category, o, m);
  }
};

inline GrothendieckTotal grothendieck(const IndexedCategory& ic) {
  auto rep = check_strictness(ic);
  if (!rep.ok()) fail(Errc::StrictnessViolation, rep.failures.front());
  const auto& idx = ic.index;
  bool fib = ic.convention == GrothConvention::Fibration;
  GrothendieckTotal t{ic, std::nullopt, {}, {}, {}, {}};
  std::vector<Id> objs;
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident, po, pm;
  for (const auto& i : idx.objects())
    for (const auto& x : ic.fiber(i).objects()) {
      Id o = GrothendieckTotal::object_id(i, x);
      objs.push_back(o);
      t.object_parts[o] = {i, x};
      po[o] = i;
    }
  std::map<std::pair<Id, Id>, std::vector<Id>> out_of;
  for (const auto& a : idx.morphisms()) {
    const auto& p = ic.at(a.id);
    const auto& ci = ic.fiber(a.source);
    const auto& cj = ic.fiber(a.target);
    for (const auto& x : ci.objects())
      for (const auto& y : cj.objects()) {
        const auto& fs = fib ? ci.hom(x, p.object(y)) : cj.hom(p.object(x), y);
        for (const auto& f : fs) {
          Id m = GrothendieckTotal::morphism_id(a.id, x, f, y);
          Id s = GrothendieckTotal::object_id(a.source, x), tg = GrothendieckTotal::object_id(a.target, y);
          mors.push_back({m, s, tg});
          t.morphism_parts[m] = {a.id, x, f, y};
          pm[m] = a.id;
          out_of[{a.source, x}].push_back(m);
          if (idx.is_identity(a.id) && x == y && f == ci.identity(x)) ident[s] = m;
        }
      }
  }
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& [m1, p1] : t.morphism_parts) {
    const auto& a = idx.target(p1.a);
    for (const auto& m2 : out_of[{a, p1.target}]) {
      const auto& p2 = t.morphism_parts.at(m2);
      const auto& ab = idx.compose(p1.a, p2.a);
      Id f = fib ? ic.fiber(idx.source(p1.a)).compose(p1.f, ic.at(p1.a).morphism(p2.f))
                 : ic.fiber(idx.target(p2.a)).compose(ic.at(p2.a).morphism(p1.f), p2.f);
      comp[{m1, m2}] = GrothendieckTotal::morphism_id(ab, p1.source, f, p2.target);
    }
  }
  t.category = FinCategory::make(objs, mors, ident, comp);
  t.projection = Passage<FinCategory>(t.category, idx, po, pm);
  return t;
}

inline GrothendieckTotal grothendieck(const IndexedAdjunction& ix, GrothConvention conv) {
  require_indexed_adjunction(ix);
  auto t = grothendieck(conv == GrothConvention::Fibration ? grave_part(ix) : acute_part(ix));
  t.ix = ix;
  return t;
}

// Component at A: <i,A> -> <j,left_a(A)>.
inline Bridge<FinCategory> acute_inclusion_bridge(const GrothendieckTotal& t, const Id& a) {
  const auto& idx = t.index();
  const auto& adj = t.adjunction().at(a);
  const auto& cj = t.fiber(idx.target(a));
  std::map<Id, Id> c;
  for (const auto& x : t.fiber(idx.source(a)).objects()) {
    const auto& y = adj.left.object(x);
    Id f = t.convention() == GrothConvention::Fibration ? adj.unit.at(x) : cj.identity(y);
    c[x] = GrothendieckTotal::morphism_id(a, x, f, y);
  }
  return Bridge<FinCategory>(t.inclusion(idx.source(a)), compose_passages(adj.left, t.inclusion(idx.target(a))), c);
}

// Component at B: <i,right_a(B)> -> <j,B>.
inline Bridge<FinCategory> grave_inclusion_bridge(const GrothendieckTotal& t, const Id& a) {
  const auto& idx = t.index();
  const auto& adj = t.adjunction().at(a);
  const auto& ci = t.fiber(idx.source(a));
  std::map<Id, Id> c;
  for (const auto& y : t.fiber(idx.target(a)).objects()) {
    const auto& x = adj.right.object(y);
    Id f = t.convention() == GrothConvention::Fibration ? ci.identity(x) : adj.counit.at(y);
    c[y] = GrothendieckTotal::morphism_id(a, x, f, y);
  }
  return Bridge<FinCategory>(compose_passages(adj.right, t.inclusion(idx.source(a))), t.inclusion(idx.target(a)), c);
}

// The identity-on-objects isomorphism between the two conventions, by adjoint transpose.
inline Passage<FinCategory> transpose_passage(const GrothendieckTotal& from, const GrothendieckTotal& to) {
  if (from.convention() == to.convention()) return identity_passage(from.category);
  std::map<Id, Id> o, m;
  for (const auto& x : from.category.objects()) o[x] = x;
  for (const auto& [id, p] : from.morphism_parts) {
    auto w = from.adjunction().at(p.a).witness();
    Id f = from.convention() == GrothConvention::Fibration ? w.to_left(p.target, p.f) : w.to_right(p.source, p.f);
    m[id] = GrothendieckTotal::morphism_id(p.a, p.source, f, p.target);
  }
  return Passage<FinCategory>(from.category, to.category, o, m);
}

namespace detail {

inline Cone<FinCategory> map_cone(const Cone<FinCategory>& c, const Passage<FinCategory>& f, const Passage<FinCategory>& d) {
  std::map<Id, Id> legs;
  for (const auto& [j, m] : c.legs) legs[j] = f.morphism(m);
  return Cone<FinCategory>{d, f.object(c.vertex), legs, c.kind};
}

// Fibration convention for limits, opfibration for colimits.
inline LimitResult<FinCategory> structured(const GrothendieckTotal& t, const Passage<FinCategory>& d, ConeKind kind) {
  bool lim = kind == ConeKind::Limit;
  const auto& shape = d.source();
  auto projected = compose_passages(d, t.projection);
  auto idx = oracle_universal(projected, kind);
  const Id i = idx.vertex();
  const auto& ci = t.fiber(i);
  auto transport = [&](const Id& a) -> const Passage<FinCategory>& { return t.along(a); };
  std::map<Id, Id> o, m;
  for (const auto& j : shape.objects()) o[j] = transport(idx.cone.leg(j)).object(t.fiber_object(d.object(j)));
  for (const auto& u : shape.morphisms()) {
    const auto& p = t.parts(d.morphism(u.id));
    m[u.id] = transport(idx.cone.leg(lim ? u.source : u.target)).morphism(p.f);
  }
  Passage<FinCategory> fd(shape, ci, o, m);
  std::optional<LimitResult<FinCategory>> fl;
  try {
    fl = oracle_universal(fd, kind);
  } catch (const Error& e) {
    if (e.code() != Errc::NoUniversalCone) throw;
    fail(Errc::FiberNotCocomplete, "fiber over '" + i + "' lacks the required " + (lim ? "limit" : "colimit"));
  }
  const Id l = fl->vertex();
  std::map<Id, Id> legs;
  for (const auto& j : shape.objects()) {
    const auto& aj = t.fiber_object(d.object(j));
    legs[j] = lim ? GrothendieckTotal::morphism_id(idx.cone.leg(j), l, fl->cone.leg(j), aj)
                  : GrothendieckTotal::morphism_id(idx.cone.leg(j), aj, fl->cone.leg(j), l);
  }
  Cone<FinCategory> cone{d, GrothendieckTotal::object_id(i, l), legs, kind};
  auto index_mediator = idx.mediator;
  auto mediator = [t, projected, index_mediator, cone, l, lim](const Cone<FinCategory>& c) {
    require_cone(c);
    std::map<Id, Id> pl;
    for (const auto& [j, leg] : c.legs) pl[j] = t.projection.morphism(leg);
    const Id k = t.index_of(c.vertex);
    const Id b = t.fiber_object(c.vertex);
    const Id mi = index_mediator(Cone<FinCategory>{projected, k, pl, c.kind});
    const auto& fiber = t.fiber(k);
    const auto& hs = lim ? fiber.hom(b, t.along(mi).object(l)) : fiber.hom(t.along(mi).object(l), b);
    std::vector<Id> found;
    for (const auto& h : hs) {
      Id cand = lim ? GrothendieckTotal::morphism_id(mi, b, h, l) : GrothendieckTotal::morphism_id(mi, l, h, b);
      if (factors(cone, c, cand)) found.push_back(cand);
    }
    if (found.empty()) fail(Errc::NoMediator, "candidate does not factor through the structured cone");
    if (found.size() > 1) fail(Errc::NonUniqueMediator, "candidate factors in several ways");
    return found.front();
  };
  return {cone, mediator};
}

inline LimitResult<FinCategory> in_convention(const GrothendieckTotal& t, const Passage<FinCategory>& d, ConeKind kind,
                                              GrothConvention want) {
  if (t.convention() == want) return structured(t, d, kind);
  auto other = grothendieck(t.adjunction(), want);
  auto there = transpose_passage(t, other);
  auto back = transpose_passage(other, t);
  auto r = structured(other, compose_passages(d, there), kind);
  auto inner = r.mediator;
  return {map_cone(r.cone, back, d), [inner, there, back, d](const Cone<FinCategory>& c) {
            require_cone(c);
            return back.morphism(inner(map_cone(c, there, compose_passages(d, there))));
          }};
}

}  // namespace detail

// Index limit, reindex along its legs by the right adjoints, then the fiber limit.
inline LimitResult<FinCategory> groth_structured_limit(const GrothendieckTotal& t, const Passage<FinCategory>& d) {
  return detail::in_convention(t, d, ConeKind::Limit, GrothConvention::Fibration);
}

// Index colimit, push forward along its legs by the left adjoints, then the fiber colimit.
inline LimitResult<FinCategory> groth_structured_colimit(const GrothendieckTotal& t, const Passage<FinCategory>& d) {
  return detail::in_convention(t, d, ConeKind::Colimit, GrothConvention::Opfibration);
}

}  // namespace fole
