#pragma once

#include <algorithm>
#include <concepts>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "fole/fincat/ids.hpp"

namespace fole {

// Abstract category presentation. compose(f, g) is diagrammatic: first f, then g.
template <class C>
concept Category = requires(const C& c, const typename C::Object& o, const typename C::Morphism& m) {
  { c.identity(o) } -> std::convertible_to<typename C::Morphism>;
  { c.compose(m, m) } -> std::convertible_to<typename C::Morphism>;
  { c.source(m) } -> std::convertible_to<typename C::Object>;
  { c.target(m) } -> std::convertible_to<typename C::Object>;
  { o == o } -> std::convertible_to<bool>;
  { m == m } -> std::convertible_to<bool>;
};

struct MorphismDecl {
  Id id;
  Id source;
  Id target;
  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

class FinCategory {
 public:
  using Object = Id;
  using Morphism = Id;

  FinCategory() : d_(std::make_shared<Data>()) {}

  // Composites involving an identity may be omitted from the table; they are filled in.
  static FinCategory make(std::vector<Id> objects, std::vector<MorphismDecl> morphisms,
                          const std::map<Id, Id>& identity,
                          const std::map<std::pair<Id, Id>, Id>& composition) {
    auto d = std::make_shared<Data>();
    std::sort(objects.begin(), objects.end());
    for (std::size_t n = 1; n < objects.size(); ++n)
      if (objects[n] == objects[n - 1]) fail(Errc::UnknownId, "duplicate object '" + objects[n] + "'");
    std::sort(morphisms.begin(), morphisms.end(),
              [](const MorphismDecl& a, const MorphismDecl& b) { return a.id < b.id; });
    for (std::size_t n = 1; n < morphisms.size(); ++n)
      if (morphisms[n].id == morphisms[n - 1].id)
        fail(Errc::UnknownId, "duplicate morphism '" + morphisms[n].id + "'");
    d->objects = std::move(objects);
    d->morphisms = std::move(morphisms);
    for (std::size_t n = 0; n < d->objects.size(); ++n) d->obj_index[d->objects[n]] = n;
    for (std::size_t n = 0; n < d->morphisms.size(); ++n) {
      const auto& m = d->morphisms[n];
      if (!d->obj_index.count(m.source) || !d->obj_index.count(m.target))
        fail(Errc::UnknownId, "morphism '" + m.id + "' has an undeclared endpoint");
      d->mor_index[m.id] = n;
    }
    const std::size_t nm = d->morphisms.size();
    d->src.resize(nm);
    d->tgt.resize(nm);
    for (std::size_t n = 0; n < nm; ++n) {
      d->src[n] = d->obj_index.at(d->morphisms[n].source);
      d->tgt[n] = d->obj_index.at(d->morphisms[n].target);
    }
    d->ident.assign(d->objects.size(), npos);
    d->is_ident.assign(nm, false);
    for (const auto& x : d->objects) {
      auto it = identity.find(x);
      if (it == identity.end()) fail(Errc::IdentityLawViolation, "object '" + x + "' has no identity");
      auto mi = d->mor_index.find(it->second);
      if (mi == d->mor_index.end()) fail(Errc::UnknownId, "identity '" + it->second + "' is not a morphism");
      std::size_t xi = d->obj_index.at(x);
      if (d->src[mi->second] != xi || d->tgt[mi->second] != xi)
        fail(Errc::IdentityLawViolation, "identity '" + it->second + "' is not an endomorphism of '" + x + "'");
      d->ident[xi] = mi->second;
      d->is_ident[mi->second] = true;
    }
    for (const auto& [x, m] : identity)
      if (!d->obj_index.count(x)) fail(Errc::UnknownId, "identity given for undeclared object '" + x + "'");
    d->table.assign(nm * nm, npos);
    for (const auto& [pr, h] : composition) {
      auto a = d->mor_index.find(pr.first), b = d->mor_index.find(pr.second), c = d->mor_index.find(h);
      if (a == d->mor_index.end() || b == d->mor_index.end() || c == d->mor_index.end())
        fail(Errc::UnknownId, "composition entry (" + pr.first + "," + pr.second + ")=" + h + " names an unknown morphism");
      if (d->tgt[a->second] != d->src[b->second])
        fail(Errc::NonComposablePair, "composite given for non-composable pair (" + pr.first + "," + pr.second + ")");
      if (d->src[c->second] != d->src[a->second] || d->tgt[c->second] != d->tgt[b->second])
        fail(Errc::NonComposablePair, "composite " + h + " of (" + pr.first + "," + pr.second + ") has wrong endpoints");
      d->table[a->second * nm + b->second] = c->second;
    }
    for (std::size_t f = 0; f < nm; ++f) {
      std::size_t a = d->ident[d->src[f]], b = d->ident[d->tgt[f]];
      auto& l = d->table[a * nm + f];
      if (l == npos) l = f;
      if (l != f)
        fail(Errc::IdentityLawViolation, "compose(" + d->morphisms[a].id + "," + d->morphisms[f].id + ") != " + d->morphisms[f].id);
      auto& r = d->table[f * nm + b];
      if (r == npos) r = f;
      if (r != f)
        fail(Errc::IdentityLawViolation, "compose(" + d->morphisms[f].id + "," + d->morphisms[b].id + ") != " + d->morphisms[f].id);
    }
    for (std::size_t f = 0; f < nm; ++f)
      for (std::size_t g = 0; g < nm; ++g)
        if (d->tgt[f] == d->src[g] && d->table[f * nm + g] == npos)
          fail(Errc::IncompleteComposition, "no composite for (" + d->morphisms[f].id + "," + d->morphisms[g].id + ")");
    for (std::size_t f = 0; f < nm; ++f)
      for (std::size_t g = 0; g < nm; ++g) {
        if (d->tgt[f] != d->src[g]) continue;
        std::size_t fg = d->table[f * nm + g];
        for (std::size_t h = 0; h < nm; ++h) {
          if (d->tgt[g] != d->src[h]) continue;
          if (d->table[fg * nm + h] != d->table[f * nm + d->table[g * nm + h]])
            fail(Errc::AssociativityViolation, "(" + d->morphisms[f].id + "," + d->morphisms[g].id + "," +
                                                   d->morphisms[h].id + ")");
        }
      }
    d->homs.assign(d->objects.size() * d->objects.size(), {});
    for (std::size_t f = 0; f < nm; ++f)
      d->homs[d->src[f] * d->objects.size() + d->tgt[f]].push_back(d->morphisms[f].id);
    return FinCategory(std::move(d));
  }

  const std::vector<Id>& objects() const { return d_->objects; }
  const std::vector<MorphismDecl>& morphisms() const { return d_->morphisms; }
  bool has_object(const Id& x) const { return d_->obj_index.count(x) > 0; }
  bool has_morphism(const Id& m) const { return d_->mor_index.count(m) > 0; }

  const Id& source(const Id& m) const { return d_->morphisms[mi(m)].source; }
  const Id& target(const Id& m) const { return d_->morphisms[mi(m)].target; }
  const Id& identity(const Id& x) const { return d_->morphisms[d_->ident[oi(x)]].id; }
  bool is_identity(const Id& m) const { return d_->is_ident[mi(m)]; }

  const Id& compose(const Id& f, const Id& g) const {
    std::size_t a = mi(f), b = mi(g);
    std::size_t c = d_->table[a * d_->morphisms.size() + b];
    if (c == npos) fail(Errc::NonComposablePair, "(" + f + "," + g + ")");
    return d_->morphisms[c].id;
  }

  const std::vector<Id>& hom(const Id& x, const Id& y) const {
    return d_->homs[oi(x) * d_->objects.size() + oi(y)];
  }

  // Edge decomposition of a morphism when the category was built freely (empty for identities).
  const std::vector<Id>* generator_path(const Id& m) const {
    if (!d_->paths) return nullptr;
    auto it = d_->paths->find(m);
    return it == d_->paths->end() ? nullptr : &it->second;
  }
  bool is_free() const { return d_->paths.has_value(); }

  FinCategory with_paths(std::map<Id, std::vector<Id>> paths) const {
    auto d = std::make_shared<Data>(*d_);
    d->paths = std::move(paths);
    return FinCategory(std::move(d));
  }

  std::size_t object_index(const Id& x) const { return oi(x); }
  std::size_t morphism_index(const Id& m) const { return mi(m); }

  friend bool operator==(const FinCategory& a, const FinCategory& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->objects == b.d_->objects && a.d_->morphisms == b.d_->morphisms && a.d_->ident == b.d_->ident &&
           a.d_->table == b.d_->table;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  struct Data {
    std::vector<Id> objects;
    std::vector<MorphismDecl> morphisms;
    std::unordered_map<Id, std::size_t> obj_index, mor_index;
    std::vector<std::size_t> src, tgt, ident;
    std::vector<bool> is_ident;
    std::vector<std::size_t> table;
    std::vector<std::vector<Id>> homs;
    std::optional<std::map<Id, std::vector<Id>>> paths;
  };
  explicit FinCategory(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

  std::size_t oi(const Id& x) const {
    auto it = d_->obj_index.find(x);
    if (it == d_->obj_index.end()) fail(Errc::UnknownId, "no object '" + x + "'");
    return it->second;
  }
  std::size_t mi(const Id& m) const {
    auto it = d_->mor_index.find(m);
    if (it == d_->mor_index.end()) fail(Errc::UnknownId, "no morphism '" + m + "'");
    return it->second;
  }

  std::shared_ptr<const Data> d_;
};

inline FinCategory make_category(std::vector<Id> objects, std::vector<MorphismDecl> morphisms,
                                 const std::map<Id, Id>& identity,
                                 const std::map<std::pair<Id, Id>, Id>& composition) {
  return FinCategory::make(std::move(objects), std::move(morphisms), identity, composition);
}

inline Id free_identity_id(const Id& x) { return "id_" + x; }

// Paths are named by their edges joined with ';'; the empty path at x is "id_x".
inline FinCategory free_on_acyclic_graph(std::vector<Id> nodes, const std::vector<MorphismDecl>& edges) {
  std::sort(nodes.begin(), nodes.end());
  std::map<Id, std::vector<const MorphismDecl*>> out;
  for (const auto& x : nodes) out[x];
  for (const auto& e : edges) {
    if (!out.count(e.source) || !out.count(e.target))
      fail(Errc::UnknownId, "edge '" + e.id + "' has an undeclared endpoint");
    if (e.id.find(';') != std::string::npos) fail(Errc::UnknownId, "edge id '" + e.id + "' contains ';'");
    for (const auto& x : nodes)
      if (e.id == free_identity_id(x)) fail(Errc::UnknownId, "edge id '" + e.id + "' clashes with an identity");
    out[e.source].push_back(&e);
  }
  std::map<Id, int> state;
  std::function<void(const Id&)> visit = [&](const Id& x) {
    state[x] = 1;
    for (const auto* e : out[x]) {
      int s = state[e->target];
      if (s == 1) fail(Errc::CycleDetected, "edge '" + e->id + "' closes a cycle through '" + e->target + "'");
      if (s == 0) visit(e->target);
    }
    state[x] = 2;
  };
  for (const auto& x : nodes)
    if (state[x] == 0) visit(x);

  struct Path {
    Id src, tgt;
    std::vector<Id> edges;
  };
  std::vector<Path> paths;
  std::function<void(Path)> extend = [&](Path p) {
    paths.push_back(p);
    for (const auto* e : out[p.tgt]) {
      Path q = p;
      q.tgt = e->target;
      q.edges.push_back(e->id);
      extend(q);
    }
  };
  for (const auto& x : nodes) extend(Path{x, x, {}});

  auto name = [](const Path& p) {
    if (p.edges.empty()) return free_identity_id(p.src);
    std::string s;
    for (std::size_t n = 0; n < p.edges.size(); ++n) s += (n ? ";" : "") + p.edges[n];
    return s;
  };
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident;
  std::map<Id, std::vector<Id>> decomposition;
  std::map<std::vector<Id>, Id> by_edges;
  for (const auto& p : paths) {
    Id id = name(p);
    mors.push_back({id, p.src, p.tgt});
    if (p.edges.empty()) ident[p.src] = id;
    decomposition[id] = p.edges;
    if (!p.edges.empty()) by_edges[p.edges] = id;
  }
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& p : paths)
    for (const auto& q : paths) {
      if (p.tgt != q.src || p.edges.empty() || q.edges.empty()) continue;
      std::vector<Id> e = p.edges;
      e.insert(e.end(), q.edges.begin(), q.edges.end());
      comp[{name(p), name(q)}] = by_edges.at(e);
    }
  return FinCategory::make(nodes, mors, ident, comp).with_paths(std::move(decomposition));
}

inline FinCategory terminal_category() { return free_on_acyclic_graph({"*"}, {}); }
inline FinCategory empty_category() { return free_on_acyclic_graph({}, {}); }

inline FinCategory discrete_category(const std::vector<Id>& objects) { return free_on_acyclic_graph(objects, {}); }

// Same identifiers with endpoints swapped; opposite(opposite(C)) == C.
inline FinCategory opposite(const FinCategory& c) {
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident;
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& m : c.morphisms()) mors.push_back({m.id, m.target, m.source});
  for (const auto& x : c.objects()) ident[x] = c.identity(x);
  for (const auto& f : c.morphisms())
    for (const auto& g : c.morphisms())
      if (f.target == g.source) comp[{g.id, f.id}] = c.compose(f.id, g.id);
  FinCategory op = FinCategory::make(c.objects(), mors, ident, comp);
  if (c.is_free()) {
    std::map<Id, std::vector<Id>> paths;
    for (const auto& m : c.morphisms()) {
      auto p = *c.generator_path(m.id);
      std::reverse(p.begin(), p.end());
      paths[m.id] = p;
    }
    op = op.with_paths(std::move(paths));
  }
  return op;
}

inline FinCategory product_category(const FinCategory& a, const FinCategory& b) {
  std::vector<Id> objs;
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident;
  std::map<std::pair<Id, Id>, Id> comp;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) {
      objs.push_back(pair_id(x, y));
      ident[pair_id(x, y)] = pair_id(a.identity(x), b.identity(y));
    }
  for (const auto& f : a.morphisms())
    for (const auto& g : b.morphisms())
      mors.push_back({pair_id(f.id, g.id), pair_id(f.source, g.source), pair_id(f.target, g.target)});
  for (const auto& f1 : a.morphisms())
    for (const auto& f2 : a.morphisms()) {
      if (f1.target != f2.source) continue;
      for (const auto& g1 : b.morphisms())
        for (const auto& g2 : b.morphisms())
          if (g1.target == g2.source)
            comp[{pair_id(f1.id, g1.id), pair_id(f2.id, g2.id)}] =
                pair_id(a.compose(f1.id, f2.id), b.compose(g1.id, g2.id));
    }
  return FinCategory::make(objs, mors, ident, comp);
}

inline Id tagged_id(int tag, const Id& x) { return pair_id(std::to_string(tag), x); }

inline FinCategory coproduct_category(const FinCategory& a, const FinCategory& b) {
  std::vector<Id> objs;
  std::vector<MorphismDecl> mors;
  std::map<Id, Id> ident;
  std::map<std::pair<Id, Id>, Id> comp;
  int tag = 1;
  for (const FinCategory* c : {&a, &b}) {
    for (const auto& x : c->objects()) {
      objs.push_back(tagged_id(tag, x));
      ident[tagged_id(tag, x)] = tagged_id(tag, c->identity(x));
    }
    for (const auto& f : c->morphisms())
      mors.push_back({tagged_id(tag, f.id), tagged_id(tag, f.source), tagged_id(tag, f.target)});
    for (const auto& f : c->morphisms())
      for (const auto& g : c->morphisms())
        if (f.target == g.source) comp[{tagged_id(tag, f.id), tagged_id(tag, g.id)}] = tagged_id(tag, c->compose(f.id, g.id));
    ++tag;
  }
  return FinCategory::make(objs, mors, ident, comp);
}

}  // namespace fole
