#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "fole/fincat/category.hpp"

namespace fole {

// Functor out of a finite category, stored extensionally and validated on construction.
template <Category C>
class Passage {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  Passage() = default;
  Passage(FinCategory source, C target, std::map<Id, Object> on_objects, std::map<Id, Morphism> on_morphisms)
      : d_(std::make_shared<const Data>(Data{std::move(source), std::move(target), std::move(on_objects), std::move(on_morphisms)})) {
    validate();
  }

  // Extends edge images along paths; the source must be a freely generated category.
  static Passage from_generators(FinCategory source, C target, std::map<Id, Object> on_objects,
                                 const std::map<Id, Morphism>& on_edges) {
    if (!source.is_free()) fail(Errc::FunctorialityViolation, "from_generators needs a freely generated source");
    std::map<Id, Morphism> mor;
    for (const auto& m : source.morphisms()) {
      const auto& path = *source.generator_path(m.id);
      if (path.empty()) {
        mor.emplace(m.id, target.identity(lookup(on_objects, m.source, "object map")));
        continue;
      }
      Morphism acc = lookup(on_edges, path[0], "edge map");
      for (std::size_t n = 1; n < path.size(); ++n) acc = target.compose(acc, lookup(on_edges, path[n], "edge map"));
      mor.emplace(m.id, std::move(acc));
    }
    return Passage(std::move(source), std::move(target), std::move(on_objects), std::move(mor));
  }

  const FinCategory& source() const { return d_->source; }
  const C& target() const { return d_->target; }
  const Object& object(const Id& x) const { return lookup(d_->obj, x, "passage object map"); }
  const Morphism& morphism(const Id& m) const { return lookup(d_->mor, m, "passage morphism map"); }
  const std::map<Id, Object>& object_map() const { return d_->obj; }
  const std::map<Id, Morphism>& morphism_map() const { return d_->mor; }

  friend bool operator==(const Passage& a, const Passage& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->source == b.d_->source && a.d_->target == b.d_->target && a.d_->obj == b.d_->obj && a.d_->mor == b.d_->mor;
  }

 private:
  struct Data {
    FinCategory source;
    C target;
    std::map<Id, Object> obj;
    std::map<Id, Morphism> mor;
  };

  void validate() const {
    const auto& source_ = d_->source;
    const auto& target_ = d_->target;
    const auto& obj_ = d_->obj;
    const auto& mor_ = d_->mor;
    for (const auto& x : source_.objects())
      if (!obj_.count(x)) fail(Errc::FunctorialityViolation, "object '" + x + "' is not mapped");
    for (const auto& m : source_.morphisms())
      if (!mor_.count(m.id)) fail(Errc::FunctorialityViolation, "morphism '" + m.id + "' is not mapped");
    if (obj_.size() != source_.objects().size() || mor_.size() != source_.morphisms().size())
      fail(Errc::FunctorialityViolation, "passage maps identifiers outside its source");
    for (const auto& m : source_.morphisms()) {
      const auto& fm = mor_.at(m.id);
      if (!(target_.source(fm) == obj_.at(m.source)) || !(target_.target(fm) == obj_.at(m.target)))
        fail(Errc::FunctorialityViolation, "image of '" + m.id + "' has wrong endpoints");
    }
    for (const auto& x : source_.objects())
      if (!(mor_.at(source_.identity(x)) == target_.identity(obj_.at(x))))
        fail(Errc::FunctorialityViolation, "identity of '" + x + "' is not preserved");
    for (const auto& f : source_.morphisms())
      for (const auto& g : source_.morphisms()) {
        if (f.target != g.source || source_.is_identity(f.id) || source_.is_identity(g.id)) continue;
        if (!(mor_.at(source_.compose(f.id, g.id)) == target_.compose(mor_.at(f.id), mor_.at(g.id))))
          fail(Errc::FunctorialityViolation, "composite (" + f.id + "," + g.id + ") is not preserved");
      }
  }

  std::shared_ptr<const Data> d_ = std::make_shared<const Data>();
};

// Natural transformation between passages with a common finite source.
template <Category C>
class Bridge {
 public:
  using Morphism = typename C::Morphism;

  Bridge(Passage<C> from, Passage<C> to, std::map<Id, Morphism> components)
      : from_(std::move(from)), to_(std::move(to)), comp_(std::move(components)) {
    validate();
  }

  // Components already known to be natural.
  static Bridge trusted(Passage<C> from, Passage<C> to, std::map<Id, Morphism> components) {
    return Bridge(Trusted{}, std::move(from), std::move(to), std::move(components));
  }

  const Passage<C>& source() const { return from_; }
  const Passage<C>& target() const { return to_; }
  const Morphism& at(const Id& x) const { return lookup(comp_, x, "bridge component"); }
  const std::map<Id, Morphism>& components() const { return comp_; }

  friend bool operator==(const Bridge& a, const Bridge& b) {
    return a.from_ == b.from_ && a.to_ == b.to_ && a.comp_ == b.comp_;
  }

 private:
  struct Trusted {};
  Bridge(Trusted, Passage<C> from, Passage<C> to, std::map<Id, Morphism> components)
      : from_(std::move(from)), to_(std::move(to)), comp_(std::move(components)) {}

  void validate() const {
    if (!(from_.source() == to_.source()) || !(from_.target() == to_.target()))
      fail(Errc::EndpointMismatch, "bridge passages have different source or target");
    const auto& shape = from_.source();
    const auto& cat = from_.target();
    if (comp_.size() != shape.objects().size()) fail(Errc::NaturalityViolation, "bridge has the wrong number of components");
    for (const auto& x : shape.objects()) {
      auto it = comp_.find(x);
      if (it == comp_.end()) fail(Errc::NaturalityViolation, "missing component at '" + x + "'");
      if (!(cat.source(it->second) == from_.object(x)) || !(cat.target(it->second) == to_.object(x)))
        fail(Errc::NaturalityViolation, "component at '" + x + "' has wrong endpoints");
    }
    for (const auto& m : shape.morphisms()) {
      if (shape.is_identity(m.id)) continue;
      if (!(cat.compose(comp_.at(m.source), to_.morphism(m.id)) == cat.compose(from_.morphism(m.id), comp_.at(m.target))))
        fail(Errc::NaturalityViolation, "square at '" + m.id + "' does not commute");
    }
  }

  Passage<C> from_, to_;
  std::map<Id, Morphism> comp_;
};

// Lazily evaluated functor between locally computable categories.
template <Category C, Category D>
struct Functor {
  C source;
  D target;
  std::function<typename D::Object(const typename C::Object&)> on_object;
  std::function<typename D::Morphism(const typename C::Morphism&)> on_morphism;

  typename D::Object operator()(const typename C::Object& x) const { return on_object(x); }
  typename D::Morphism map(const typename C::Morphism& m) const { return on_morphism(m); }
};

template <Category C, Category D>
struct Transformation {
  Functor<C, D> from, to;
  std::function<typename D::Morphism(const typename C::Object&)> component;

  typename D::Morphism at(const typename C::Object& x) const { return component(x); }
};

template <Category C>
Functor<C, C> identity_functor(const C& c) {
  return {c, c, [](const typename C::Object& x) { return x; }, [](const typename C::Morphism& m) { return m; }};
}

template <Category C, Category D, Category E>
Functor<C, E> compose_functors(const Functor<C, D>& f, const Functor<D, E>& g) {
  return {f.source, g.target, [f, g](const typename C::Object& x) { return g(f(x)); },
          [f, g](const typename C::Morphism& m) { return g.map(f.map(m)); }};
}

inline Passage<FinCategory> identity_passage(const FinCategory& c) {
  std::map<Id, Id> o, m;
  for (const auto& x : c.objects()) o[x] = x;
  for (const auto& f : c.morphisms()) m[f.id] = f.id;
  return Passage<FinCategory>(c, c, o, m);
}

template <Category C>
Passage<C> constant_passage(const FinCategory& shape, const C& target, const typename C::Object& value) {
  std::map<Id, typename C::Object> o;
  std::map<Id, typename C::Morphism> m;
  for (const auto& x : shape.objects()) o.emplace(x, value);
  for (const auto& f : shape.morphisms()) m.emplace(f.id, target.identity(value));
  return Passage<C>(shape, target, std::move(o), std::move(m));
}

// f then g.
template <Category C>
Passage<C> compose_passages(const Passage<FinCategory>& f, const Passage<C>& g) {
  if (!(f.target() == g.source())) fail(Errc::EndpointMismatch, "compose_passages: target of first is not source of second");
  std::map<Id, typename C::Object> o;
  std::map<Id, typename C::Morphism> m;
  for (const auto& x : f.source().objects()) o.emplace(x, g.object(f.object(x)));
  for (const auto& u : f.source().morphisms()) m.emplace(u.id, g.morphism(f.morphism(u.id)));
  return Passage<C>(f.source(), g.target(), std::move(o), std::move(m));
}

// P^op: C^op -> D^op with the same object and morphism maps.
inline Passage<FinCategory> opposite_passage(const Passage<FinCategory>& p) {
  return Passage<FinCategory>(opposite(p.source()), opposite(p.target()), p.object_map(), p.morphism_map());
}

template <Category C, Category D>
Passage<D> apply_functor(const Passage<C>& p, const Functor<C, D>& f) {
  std::map<Id, typename D::Object> o;
  std::map<Id, typename D::Morphism> m;
  for (const auto& [x, v] : p.object_map()) o.emplace(x, f(v));
  for (const auto& [u, v] : p.morphism_map()) m.emplace(u, f.map(v));
  return Passage<D>(p.source(), f.target, std::move(o), std::move(m));
}

template <Category C>
Bridge<C> identity_bridge(const Passage<C>& p) {
  std::map<Id, typename C::Morphism> c;
  for (const auto& x : p.source().objects()) c.emplace(x, p.target().identity(p.object(x)));
  return Bridge<C>(p, p, std::move(c));
}

// F∘β: components of β at F(x).
template <Category C>
Bridge<C> whisker_left(const Passage<FinCategory>& f, const Bridge<C>& b) {
  if (!(f.target() == b.source().source())) fail(Errc::EndpointMismatch, "whisker_left: passage does not land in the bridge's shape");
  std::map<Id, typename C::Morphism> c;
  for (const auto& x : f.source().objects()) c.emplace(x, b.at(f.object(x)));
  return Bridge<C>(compose_passages(f, b.source()), compose_passages(f, b.target()), std::move(c));
}

// α∘H: H applied to the components of α.
template <Category C>
Bridge<C> whisker_right(const Bridge<FinCategory>& a, const Passage<C>& h) {
  if (!(a.source().target() == h.source())) fail(Errc::EndpointMismatch, "whisker_right: bridge does not land in the passage's source");
  std::map<Id, typename C::Morphism> c;
  for (const auto& [x, m] : a.components()) c.emplace(x, h.morphism(m));
  return Bridge<C>(compose_passages(a.source(), h), compose_passages(a.target(), h), std::move(c));
}

template <Category C, Category D>
Bridge<D> whisker_right(const Bridge<C>& b, const Functor<C, D>& f) {
  std::map<Id, typename D::Morphism> c;
  for (const auto& [x, m] : b.components()) c.emplace(x, f.map(m));
  return Bridge<D>(apply_functor(b.source(), f), apply_functor(b.target(), f), std::move(c));
}

// P∘η: components of a lazy transformation at the objects of P.
template <Category C, Category D>
Bridge<D> whisker_left(const Passage<C>& p, const Transformation<C, D>& t) {
  std::map<Id, typename D::Morphism> c;
  for (const auto& [x, v] : p.object_map()) c.emplace(x, t.at(v));
  return Bridge<D>(apply_functor(p, t.from), apply_functor(p, t.to), std::move(c));
}

// α then β.
template <Category C>
Bridge<C> vertical_compose(const Bridge<C>& a, const Bridge<C>& b) {
  if (!(a.target() == b.source())) fail(Errc::EndpointMismatch, "vertical_compose: middle passages differ");
  std::map<Id, typename C::Morphism> c;
  for (const auto& [x, m] : a.components()) c.emplace(x, a.source().target().compose(m, b.at(x)));
  return Bridge<C>(a.source(), b.target(), std::move(c));
}

}  // namespace fole
