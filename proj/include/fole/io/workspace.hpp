#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fole/diagrams/database.hpp"
#include "fole/univ/grothendieck.hpp"

namespace fole::io {

using json = nlohmann::json;

// Entities by kind, each resolved and validated; `canonical` is the normalized document.
struct Workspace {
  std::map<Id, TypeDomain> typedomains;
  std::map<Id, Infomorphism> infomorphisms;
  std::map<Id, Signature> signatures;
  std::map<Id, Table> tables;
  std::map<Id, FinCategory> shapes;
  std::map<Id, Database> databases;
  std::map<Id, DatabaseMorphismData> morphisms;
  std::map<Id, Passage<SetCat>> diagrams;
  std::map<Id, Passage<FinCategory>> passages;
  std::map<Id, IndexedAdjunction> indexed;
  std::map<Id, std::string> kinds;
  json canonical = json::object();

  const std::string& kind_of(const Id& name) const {
    auto it = kinds.find(name);
    if (it == kinds.end()) fail(Errc::ResolutionError, "no entity named '" + name + "'");
    return it->second;
  }
};

inline const std::vector<std::string>& entity_kinds() {
  static const std::vector<std::string> k{"typedomains", "infomorphisms", "signatures", "tables",   "shapes",
                                          "databases",   "morphisms",     "diagrams",   "passages", "indexed"};
  return k;
}

namespace detail {

[[noreturn]] inline void bad_shape(const std::string& where, const std::string& what) {
  fail(Errc::ParseError, where + ": " + what);
}

inline const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad_shape(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad_shape(where, "missing field '" + key + "'");
  return *it;
}

inline Id str(const json& j, const std::string& where) {
  if (!j.is_string()) bad_shape(where, "expected a string");
  return j.get<std::string>();
}

inline std::vector<Id> strings(const json& j, const std::string& where) {
  if (!j.is_array()) bad_shape(where, "expected an array of strings");
  std::vector<Id> out;
  for (const auto& x : j) out.push_back(str(x, where));
  return out;
}

inline std::vector<std::vector<Id>> tuples(const json& j, std::size_t width, const std::string& where) {
  if (!j.is_array()) bad_shape(where, "expected an array of " + std::to_string(width) + "-element arrays");
  std::vector<std::vector<Id>> out;
  for (const auto& x : j) {
    auto t = strings(x, where);
    if (t.size() != width) bad_shape(where, "expected " + std::to_string(width) + "-element arrays");
    out.push_back(std::move(t));
  }
  return out;
}

inline std::map<Id, Id> pairs(const json& j, const std::string& where) {
  std::map<Id, Id> out;
  for (const auto& t : tuples(j, 2, where))
    if (!out.emplace(t[0], t[1]).second) fail(Errc::ValidationError, where + ": '" + t[0] + "' is mapped twice");
  return out;
}

inline std::map<Id, const json*> members(const json& j, const std::string& where) {
  if (!j.is_object()) bad_shape(where, "expected an object");
  std::map<Id, const json*> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace(it.key(), &it.value());
  return out;
}

inline json sorted_strings(std::vector<Id> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline json sorted_tuples(std::vector<std::vector<Id>> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline json pair_array(const std::map<Id, Id>& m) {
  json out = json::array();
  for (const auto& [a, b] : m) out.push_back({a, b});
  return out;
}

inline std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t n = 0; n < offset && n < text.size(); ++n) {
    if (text[n] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

template <class Map>
const typename Map::mapped_type& resolve(const Map& m, const Id& name, const std::string& kind, const std::string& where) {
  auto it = m.find(name);
  if (it == m.end()) fail(Errc::ResolutionError, where + ": no " + kind + " named '" + name + "'");
  return it->second;
}

// Library failures inside an entity become validation errors naming the entity.
template <class F>
auto validated(const std::string& where, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::ResolutionError || e.code() == Errc::ValidationError) throw;
    fail(Errc::ValidationError, where + ": " + e.what());
  }
}

inline FinCategory parse_shape(const json& j, const std::string& where, json& canon) {
  if (j.contains("free_acyclic")) {
    const auto& g = j.at("free_acyclic");
    auto nodes = strings(field(g, "nodes", where), where + ".nodes");
    auto edges = tuples(g.contains("edges") ? g.at("edges") : json::array(), 3, where + ".edges");
    std::vector<MorphismDecl> decls;
    for (const auto& e : edges) decls.push_back({e[0], e[1], e[2]});
    canon["free_acyclic"] = {{"nodes", sorted_strings(nodes)}, {"edges", sorted_tuples(edges)}};
    return validated(where, [&] { return free_on_acyclic_graph(nodes, decls); });
  }
  auto objects = strings(field(j, "objects", where), where + ".objects");
  auto mors = tuples(field(j, "morphisms", where), 3, where + ".morphisms");
  auto ident = pairs(field(j, "identities", where), where + ".identities");
  auto comp = tuples(j.contains("composition") ? j.at("composition") : json::array(), 3, where + ".composition");
  std::vector<MorphismDecl> decls;
  for (const auto& m : mors) decls.push_back({m[0], m[1], m[2]});
  std::map<std::pair<Id, Id>, Id> table;
  for (const auto& c : comp) table[{c[0], c[1]}] = c[2];
  canon["objects"] = sorted_strings(objects);
  canon["morphisms"] = sorted_tuples(mors);
  canon["identities"] = pair_array(ident);
  canon["composition"] = sorted_tuples(comp);
  return validated(where, [&] { return make_category(objects, decls, ident, table); });
}

// Non-identity morphisms of a free source may be given by their generating edges alone.
template <Category C, class Build>
Passage<C> passage_from(const FinCategory& source, const C& target, std::map<Id, typename C::Object> objs,
                        std::map<Id, typename C::Morphism> given, Build&& identity, const std::string& where) {
  return validated(where, [&] {
    if (source.is_free()) {
      std::map<Id, typename C::Morphism> edges;
      for (auto& [m, v] : given) {
        auto path = source.generator_path(m);
        if (!path || path->size() != 1) fail(Errc::ValidationError, where + ": '" + m + "' is not a generating edge");
        edges.emplace(m, std::move(v));
      }
      return Passage<C>::from_generators(source, target, std::move(objs), edges);
    }
    for (const auto& m : source.morphisms())
      if (source.is_identity(m.id) && !given.count(m.id)) given.emplace(m.id, identity(objs.at(m.source)));
    return Passage<C>(source, target, std::move(objs), std::move(given));
  });
}

inline std::map<Id, Id> name_map(const json& j, const std::string& where) {
  std::map<Id, Id> out;
  for (const auto& [k, v] : members(j, where)) out.emplace(k, str(*v, where + "." + k));
  return out;
}

}  // namespace detail

inline Workspace parse_workspace_json(const json& doc) {
  using namespace detail;
  Workspace ws;
  if (!doc.is_object()) bad_shape("document", "expected a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(entity_kinds().begin(), entity_kinds().end(), it.key()) == entity_kinds().end())
      bad_shape("document", "unknown section '" + it.key() + "'");

  auto each = [&](const std::string& kind, auto&& parse) {
    json out = json::array();
    if (!doc.contains(kind)) return;
    const auto& arr = doc.at(kind);
    if (!arr.is_array()) bad_shape(kind, "expected an array");
    for (std::size_t n = 0; n < arr.size(); ++n) {
      const auto& e = arr[n];
      auto name = str(field(e, "name", kind + "[" + std::to_string(n) + "]"), kind + "[" + std::to_string(n) + "].name");
      auto where = kind + " '" + name + "'";
      if (!ws.kinds.emplace(name, kind).second) fail(Errc::ValidationError, where + ": name is already used");
      json canon = {{"name", name}};
      parse(name, e, where, canon);
      out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [](const json& a, const json& b) { return a.at("name") < b.at("name"); });
    ws.canonical[kind] = std::move(out);
  };

  each("typedomains", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto sorts = strings(field(e, "sorts", where), where + ".sorts");
    auto values = strings(field(e, "values", where), where + ".values");
    auto inc = tuples(field(e, "incidence", where), 2, where + ".incidence");
    std::set<std::pair<Id, Id>> pairs_;
    for (const auto& t : inc) pairs_.insert({t[0], t[1]});
    canon["sorts"] = sorted_strings(sorts);
    canon["values"] = sorted_strings(values);
    canon["incidence"] = sorted_tuples(inc);
    ws.typedomains.emplace(name, validated(where, [&] { return TypeDomain(FinSet(sorts), FinSet(values), pairs_); }));
  });

  each("infomorphisms", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto s = str(field(e, "source", where), where + ".source");
    auto t = str(field(e, "target", where), where + ".target");
    const auto& a2 = resolve(ws.typedomains, s, "type domain", where);
    const auto& a1 = resolve(ws.typedomains, t, "type domain", where);
    auto f = pairs(field(e, "f", where), where + ".f");
    auto g = pairs(field(e, "g", where), where + ".g");
    canon["source"] = s;
    canon["target"] = t;
    canon["f"] = pair_array(f);
    canon["g"] = pair_array(g);
    ws.infomorphisms.emplace(
        name, validated(where, [&] { return Infomorphism(a2, a1, SetFn(a2.sorts, a1.sorts, f), SetFn(a1.values, a2.values, g)); }));
  });

  each("signatures", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto sorts = strings(field(e, "sorts", where), where + ".sorts");
    auto cols = pairs(field(e, "columns", where), where + ".columns");
    canon["sorts"] = sorted_strings(sorts);
    canon["columns"] = pair_array(cols);
    std::vector<Id> arity;
    for (const auto& [i, x] : cols) arity.push_back(i);
    ws.signatures.emplace(name, validated(where, [&] { return Signature(FinSet(arity), cols, FinSet(sorts)); }));
  });

  each("tables", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto types = str(field(e, "types", where), where + ".types");
    const auto& a = resolve(ws.typedomains, types, "type domain", where);
    auto cols = pairs(field(e, "columns", where), where + ".columns");
    const auto& rows_j = field(e, "rows", where);
    if (!rows_j.is_array()) bad_shape(where + ".rows", "expected an array");
    std::vector<Id> keys, arity;
    std::map<Id, Tuple> rows;
    json rows_c = json::array();
    for (const auto& r : rows_j) {
      auto k = str(field(r, "key", where + ".rows"), where + ".rows.key");
      auto vals = pairs(field(r, "values", where + ".rows"), where + ".rows.values");
      if (!rows.emplace(k, Tuple(vals.begin(), vals.end())).second) fail(Errc::ValidationError, where + ": key '" + k + "' repeats");
      keys.push_back(k);
      rows_c.push_back({{"key", k}, {"values", pair_array(vals)}});
    }
    std::sort(rows_c.begin(), rows_c.end(), [](const json& x, const json& y) { return x.at("key") < y.at("key"); });
    for (const auto& [i, x] : cols) arity.push_back(i);
    canon["types"] = types;
    canon["columns"] = pair_array(cols);
    canon["rows"] = rows_c;
    ws.tables.emplace(name, validated(where, [&] {
                        return Table(SignedDomain(Signature(FinSet(arity), cols, a.sorts), a), FinSet(keys), rows);
                      }));
  });

  each("shapes", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    ws.shapes.emplace(name, parse_shape(e, where, canon));
  });

  // Arrow u: r -> r' carries T(u): T(r') -> T(r), given by h (columns of T(r) to columns of T(r')) and k (keys of T(r') to keys of T(r)).
  each("databases", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto shape_n = str(field(e, "shape", where), where + ".shape");
    const auto& shape = resolve(ws.shapes, shape_n, "shape", where);
    auto tnames = name_map(field(e, "tables", where), where + ".tables");
    std::map<Id, Table> tabs;
    for (const auto& [r, t] : tnames) tabs.emplace(r, resolve(ws.tables, t, "table", where + ".tables." + r));
    json arrows_c = json::object();
    std::map<Id, std::pair<std::map<Id, Id>, std::map<Id, Id>>> raw;
    if (e.contains("arrows"))
      for (const auto& [u, a] : members(e.at("arrows"), where + ".arrows")) {
        auto h = pairs(field(*a, "h", where + ".arrows." + u), where + ".arrows." + u + ".h");
        auto k = pairs(field(*a, "k", where + ".arrows." + u), where + ".arrows." + u + ".k");
        arrows_c[u] = {{"h", pair_array(h)}, {"k", pair_array(k)}};
        raw.emplace(u, std::make_pair(h, k));
      }
    canon["shape"] = shape_n;
    canon["tables"] = tnames;
    canon["arrows"] = arrows_c;
    ws.databases.emplace(name, validated(where, [&] {
                           for (const auto& r : shape.objects())
                             if (!tabs.count(r)) fail(Errc::ValidationError, "shape object '" + r + "' has no table");
                           std::map<Id, TableMorphism> arrows;
                           for (const auto& [u, hk] : raw) {
                             if (!shape.has_morphism(u)) fail(Errc::ValidationError, "'" + u + "' is not a shape arrow");
                             const auto& t1 = tabs.at(shape.target(u));
                             const auto& t2 = tabs.at(shape.source(u));
                             arrows.emplace(u, TableMorphism::over(t1, t2, hk.first, hk.second));
                           }
                           return make_database(shape, tabs, arrows);
                         }));
  });

  // Component at r runs T1(R r) -> T2(r): h maps columns of T2(r) to T1(R r), k maps keys of T1(R r) to T2(r).
  each("morphisms", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto from_n = str(field(e, "from", where), where + ".from");
    auto to_n = str(field(e, "to", where), where + ".to");
    const auto& from = resolve(ws.databases, from_n, "database", where);
    const auto& to = resolve(ws.databases, to_n, "database", where);
    auto objs = pairs(field(e, "objects", where), where + ".objects");
    auto mors = e.contains("morphisms") ? pairs(e.at("morphisms"), where + ".morphisms") : std::map<Id, Id>{};
    std::map<Id, std::pair<std::map<Id, Id>, std::map<Id, Id>>> raw;
    json comps_c = json::object();
    for (const auto& [r, c] : members(field(e, "components", where), where + ".components")) {
      auto h = pairs(field(*c, "h", where + ".components." + r), where + ".components." + r + ".h");
      auto k = pairs(field(*c, "k", where + ".components." + r), where + ".components." + r + ".k");
      comps_c[r] = {{"h", pair_array(h)}, {"k", pair_array(k)}};
      raw.emplace(r, std::make_pair(h, k));
    }
    canon["from"] = from_n;
    canon["to"] = to_n;
    canon["objects"] = pair_array(objs);
    canon["morphisms"] = pair_array(mors);
    canon["components"] = comps_c;
    ws.morphisms.emplace(name, validated(where, [&] {
                           auto r = passage_from<FinCategory>(
                               from.shape(), to.shape(), objs, mors, [&](const Id& x) { return to.shape().identity(x); },
                               where + ".objects");
                           std::map<Id, TableMorphismData> comps;
                           for (const auto& [x, hk] : raw) {
                             if (!from.shape().has_object(x)) fail(Errc::ValidationError, "'" + x + "' is not a source shape object");
                             const auto& t1 = to.table(r.object(x));
                             const auto& t2 = from.table(x);
                             auto sh = SignatureMorphism::sorted(t2.signature(), t1.signature(), hk.first);
                             comps.emplace(x, TableMorphismData{SignedDomainMorphism::over(t1.types(), sh), hk.second});
                           }
                           return DatabaseMorphismData{from, to, r, comps};
                         }));
  });

  each("diagrams", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto shape_n = str(field(e, "shape", where), where + ".shape");
    const auto& shape = resolve(ws.shapes, shape_n, "shape", where);
    std::map<Id, FinSet> sets;
    json sets_c = json::object();
    for (const auto& [x, s] : members(field(e, "sets", where), where + ".sets")) {
      auto xs = strings(*s, where + ".sets." + x);
      sets_c[x] = sorted_strings(xs);
      sets.emplace(x, FinSet(xs));
    }
    std::map<Id, std::map<Id, Id>> raw;
    json fns_c = json::object();
    if (e.contains("functions"))
      for (const auto& [u, f] : members(e.at("functions"), where + ".functions")) {
        auto m = pairs(*f, where + ".functions." + u);
        fns_c[u] = pair_array(m);
        raw.emplace(u, m);
      }
    canon["shape"] = shape_n;
    canon["sets"] = sets_c;
    canon["functions"] = fns_c;
    ws.diagrams.emplace(name, validated(where, [&] {
                          std::map<Id, SetFn> fns;
                          for (const auto& [u, m] : raw) {
                            if (!shape.has_morphism(u)) fail(Errc::ValidationError, "'" + u + "' is not a shape arrow");
                            fns.emplace(u, SetFn(sets.at(shape.source(u)), sets.at(shape.target(u)), m));
                          }
                          return passage_from<SetCat>(shape, SetCat{}, sets, fns, [](const FinSet& s) { return SetFn::identity(s); },
                                                      where);
                        }));
  });

  each("passages", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto s = str(field(e, "source", where), where + ".source");
    auto t = str(field(e, "target", where), where + ".target");
    const auto& c = resolve(ws.shapes, s, "shape", where);
    const auto& d = resolve(ws.shapes, t, "shape", where);
    auto objs = pairs(field(e, "objects", where), where + ".objects");
    auto mors = e.contains("morphisms") ? pairs(e.at("morphisms"), where + ".morphisms") : std::map<Id, Id>{};
    canon["source"] = s;
    canon["target"] = t;
    canon["objects"] = pair_array(objs);
    canon["morphisms"] = pair_array(mors);
    ws.passages.emplace(name, passage_from<FinCategory>(c, d, objs, mors, [&](const Id& x) { return d.identity(x); }, where));
  });

  // Each generating index edge names the left adjoint passage between fibers; right adjoints are found by search.
  each("indexed", [&](const Id& name, const json& e, const std::string& where, json& canon) {
    auto index_n = str(field(e, "index", where), where + ".index");
    const auto& index = resolve(ws.shapes, index_n, "shape", where);
    auto fib_n = name_map(field(e, "fibers", where), where + ".fibers");
    auto left_n = e.contains("left") ? name_map(e.at("left"), where + ".left") : std::map<Id, Id>{};
    std::map<Id, FinCategory> fibers;
    for (const auto& [i, f] : fib_n) fibers.emplace(i, resolve(ws.shapes, f, "shape", where + ".fibers." + i));
    std::map<Id, Passage<FinCategory>> lefts;
    for (const auto& [a, p] : left_n) lefts.emplace(a, resolve(ws.passages, p, "passage", where + ".left." + a));
    canon["index"] = index_n;
    canon["fibers"] = fib_n;
    canon["left"] = left_n;
    ws.indexed.emplace(name, validated(where, [&] {
                         std::map<Id, FiberAdjunction> adj;
                         for (const auto& [a, p] : lefts) adj.emplace(a, adjunction_from_left(p));
                         auto ix = indexed_from_generators(index, fibers, adj);
                         require_indexed_adjunction(ix);
                         return ix;
                       }));
  });
  return ws;
}

inline Workspace parse_workspace_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  return parse_workspace_json(doc);
}

inline Workspace parse_workspace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_workspace_text(ss.str());
}

inline json serialize(const Workspace& ws) { return ws.canonical; }

}  // namespace fole::io
