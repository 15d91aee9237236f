#pragma once

#include "fole/diagrams/database.hpp"

namespace fole::testing {

inline TypeDomain join_types() { return TypeDomain(FinSet{"p"}, FinSet{"1", "2"}, {{"1", "p"}, {"2", "p"}}); }

inline Table single_column_table(const TypeDomain& a, const Id& column, const std::map<Id, Id>& values) {
  std::vector<Id> keys;
  std::map<Id, Tuple> rows;
  for (const auto& [k, v] : values) {
    keys.push_back(k);
    rows[k] = Tuple{{column, v}};
  }
  return Table(SignedDomain(Signature::of({{column, "p"}}, a.sorts), a), FinSet(keys), rows);
}

// Tables L and R both map onto M; the join glues a, b and c into one column.
inline Database join_fixture() {
  auto a = join_types();
  auto tl = single_column_table(a, "a", {{"k1", "1"}, {"k2", "2"}});
  auto tm = single_column_table(a, "c", {{"m1", "1"}, {"m2", "2"}});
  auto tr = single_column_table(a, "b", {{"r1", "1"}, {"r2", "1"}, {"r3", "2"}});
  auto shape = free_on_acyclic_graph({"L", "M", "R"}, {{"ml", "M", "L"}, {"mr", "M", "R"}});
  auto left = TableMorphism::over(tl, tm, {{"c", "a"}}, {{"k1", "m1"}, {"k2", "m2"}});
  auto right = TableMorphism::over(tr, tm, {{"c", "b"}}, {{"r1", "m1"}, {"r2", "m1"}, {"r3", "m2"}});
  return make_database(shape, {{"L", tl}, {"M", tm}, {"R", tr}}, {{"ml", left}, {"mr", right}});
}

inline Database single_table_database(const Table& t, const Id& name = "r") {
  return make_database(free_on_acyclic_graph({name}, {}), {{name, t}}, {});
}

}  // namespace fole::testing
