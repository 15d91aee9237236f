#pragma once

#include <sstream>
#include <string>

#include "fole/fincat/report.hpp"
#include "fole/io/workspace.hpp"

namespace fole::io {

inline json set_json(const FinSet& s) { return json(s.elements()); }

inline json function_json(const SetFn& f) { return detail::pair_array(f.map); }

inline json signature_json(const Signature& s) {
  return {{"sorts", set_json(s.sorts)}, {"columns", detail::pair_array(s.sort)}};
}

inline json typedomain_json(const TypeDomain& a) {
  json inc = json::array();
  for (const auto& [v, x] : a.incidence) inc.push_back({v, x});
  return {{"sorts", set_json(a.sorts)}, {"values", set_json(a.values)}, {"incidence", inc}};
}

inline json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& k : t.keys) rows.push_back({{"key", k}, {"values", detail::pair_array(t.row(k))}});
  return {{"columns", detail::pair_array(t.signature().sort)}, {"rows", rows}};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Header "key" then the column identifiers in canonical order; one line per key.
inline std::string table_csv(const Table& t) {
  std::ostringstream out;
  out << "key";
  for (const auto& i : t.signature().arity) out << ',' << csv_field(i);
  out << '\n';
  for (const auto& k : t.keys) {
    out << csv_field(k);
    for (const auto& i : t.signature().arity) out << ',' << csv_field(t.row(k).at(i));
    out << '\n';
  }
  return out.str();
}

inline json set_diagram_json(const Passage<SetCat>& d) {
  json sets = json::object(), fns = json::object();
  for (const auto& x : d.source().objects()) sets[x] = set_json(d.object(x));
  for (const auto& m : d.source().morphisms())
    if (!d.source().is_identity(m.id)) fns[m.id] = function_json(d.morphism(m.id));
  return {{"sets", sets}, {"functions", fns}};
}

inline json check_json(const std::string& name, const CheckReport& r) {
  return {{"check", name}, {"ok", r.ok()}, {"failures", r.failures}};
}

}  // namespace fole::io
