#pragma once

#include <optional>
#include <string>

#include "fole/io/report.hpp"
#include "fole/univ/kan.hpp"
#include "fole/univ/list_limits.hpp"
#include "fole/univ/oracle.hpp"
#include "fole/univ/tbl_limits.hpp"

namespace fole::io {

enum class ExitCode { Pass = 0, CheckFailed = 1, InputError = 2 };

struct CommandResult {
  json report;
  std::optional<Table> table;  // set for commands whose payload is a single table

  bool ok() const {
    for (const auto& c : report.value("checks", json::array()))
      if (!c.at("ok").get<bool>()) return false;
    return true;
  }
};

namespace detail {

inline json base_report(const std::string& command, const Id& target) {
  return {{"command", command}, {"target", target}, {"checks", json::array()}};
}

inline json legs_json(const Cone<SetCat>& c) {
  json legs = json::object();
  for (const auto& [j, f] : c.legs) legs[j] = function_json(f);
  return legs;
}

}  // namespace detail

inline CommandResult cmd_join(const Workspace& ws, const Id& db_name) {
  const auto& db = detail::resolve(ws.databases, db_name, "database", "join");
  auto r = limit_tbl(db);
  auto rep = detail::base_report("join", db_name);
  CheckReport sig;
  if (!db.shape().objects().empty()) {
    auto colim = colimit_in_listX(sorted_schema(db, require_fixed(db).sorts));
    if (!(r.vertex().signature() == colim.vertex())) sig.fail_with("join signature differs from the schema colimit");
  }
  rep["checks"].push_back(check_json("signature is the schema colimit", sig));
  rep["result"] = table_json(r.vertex());
  return {rep, r.vertex()};
}

inline CommandResult cmd_sum(const Workspace& ws, const Id& db_name) {
  const auto& db = detail::resolve(ws.databases, db_name, "database", "sum");
  auto r = colimit_tbl(db);
  auto rep = detail::base_report("sum", db_name);
  rep["result"] = table_json(r.vertex());
  return {rep, r.vertex()};
}

inline CommandResult cmd_project(const Workspace& ws, const Id& db_name, const std::string& which) {
  const auto& db = detail::resolve(ws.databases, db_name, "database", "project");
  auto rep = detail::base_report("project", db_name);
  rep["which"] = which;
  json objs = json::object(), arrows = json::object();
  if (which == "schema") {
    for (const auto& r : db.shape().objects()) objs[r] = signature_json(db.table(r).signature());
    for (const auto& u : db.shape().morphisms())
      if (!db.shape().is_identity(u.id)) arrows[u.id] = function_json(db.arrow(u.id).domain_map.signature_map.arity_map);
    rep["result"] = {{"signatures", objs}, {"arrows", arrows}};
  } else if (which == "key") {
    rep["result"] = set_diagram_json(key_projection(db));
  } else if (which == "data") {
    for (const auto& r : db.shape().objects()) objs[r] = typedomain_json(db.table(r).types());
    rep["result"] = {{"typedomains", objs}};
  } else {
    fail(Errc::ParseError, "--which must be schema, key or data");
  }
  return {rep, std::nullopt};
}

inline CommandResult cmd_universal(const Workspace& ws, const Id& name, ConeKind kind) {
  const auto& d = detail::resolve(ws.diagrams, name, "diagram", kind == ConeKind::Limit ? "limit" : "colimit");
  auto r = kind == ConeKind::Limit ? limit_in_set(d) : colimit_in_set(d);
  auto rep = detail::base_report(kind == ConeKind::Limit ? "limit" : "colimit", name);
  rep["result"] = {{"vertex", set_json(r.vertex())}, {"legs", detail::legs_json(r.cone)}};
  return {rep, std::nullopt};
}

inline CommandResult cmd_kan(const Workspace& ws, const std::string& direction, const Id& k_name, const Id& s_name) {
  const auto& k = detail::resolve(ws.passages, k_name, "passage", "kan");
  const auto& s = detail::resolve(ws.diagrams, s_name, "diagram", "kan");
  if (!(k.source() == s.source())) fail(Errc::ValidationError, "kan: diagram is not defined on the source of the passage");
  auto rep = detail::base_report("kan", s_name);
  rep["along"] = k_name;
  rep["direction"] = direction;
  json result;
  if (direction == "left") {
    auto e = lan(k, s);
    result = set_diagram_json(e.extension);
    json unit = json::object();
    for (const auto& [x, f] : e.bridge.components()) unit[x] = function_json(f);
    result["unit"] = unit;
  } else if (direction == "right") {
    auto e = ran(k, s);
    result = set_diagram_json(e.extension);
    json counit = json::object();
    for (const auto& [x, f] : e.bridge.components()) counit[x] = function_json(f);
    result["counit"] = counit;
  } else {
    fail(Errc::ParseError, "--direction must be left or right");
  }
  rep["result"] = result;
  return {rep, std::nullopt};
}

inline CommandResult cmd_check(const Workspace& ws, const Id& name) {
  const auto& m = detail::resolve(ws.morphisms, name, "database morphism", "check");
  auto rep = detail::base_report("check", name);
  rep["checks"].push_back(check_json("database morphism", check_database_morphism(m)));
  return {rep, std::nullopt};
}

inline CommandResult cmd_groth(const Workspace& ws, const Id& name, const std::string& convention) {
  const auto& ix = detail::resolve(ws.indexed, name, "indexed adjunction", "groth");
  GrothConvention conv;
  if (convention == "fibration")
    conv = GrothConvention::Fibration;
  else if (convention == "opfibration")
    conv = GrothConvention::Opfibration;
  else
    fail(Errc::ParseError, "--convention must be fibration or opfibration");
  auto t = grothendieck(ix, conv);
  auto other = grothendieck(ix, conv == GrothConvention::Fibration ? GrothConvention::Opfibration : GrothConvention::Fibration);
  auto rep = detail::base_report("groth", name);
  rep["convention"] = convention;
  rep["checks"].push_back(check_json("indexed adjunction", check_indexed_adjunction(ix)));
  CheckReport transpose;
  auto there = transpose_passage(t, other);
  auto back = transpose_passage(other, t);
  if (!(compose_passages(there, back) == identity_passage(t.category)) ||
      !(compose_passages(back, there) == identity_passage(other.category)))
    transpose.fail_with("adjoint transpose is not a bijection on morphisms");
  rep["checks"].push_back(check_json("adjoint transpose", transpose));
  json mors = json::array();
  for (const auto& m : t.category.morphisms()) mors.push_back({m.id, m.source, m.target});
  rep["result"] = {{"objects", t.category.objects()}, {"morphisms", mors}};
  return {rep, std::nullopt};
}

inline CommandResult cmd_validate(const Workspace& ws, const Id& name) {
  const auto& kind = ws.kind_of(name);
  auto rep = detail::base_report("validate", name);
  rep["kind"] = kind;
  CheckReport loaded;
  rep["checks"].push_back(check_json("loads", loaded));
  if (kind == "morphisms") rep["checks"].push_back(check_json("database morphism", check_database_morphism(ws.morphisms.at(name))));
  if (kind == "indexed") rep["checks"].push_back(check_json("indexed adjunction", check_indexed_adjunction(ws.indexed.at(name))));
  return {rep, std::nullopt};
}

}  // namespace fole::io
