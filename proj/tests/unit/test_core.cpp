#include <catch_amalgamated.hpp>

#include "fole/core/fiber.hpp"
#include "support/generators.hpp"

using namespace fole;
using namespace fole::testing;

namespace {

TypeDomain flat() { return TypeDomain({"p", "q"}, {"1", "2", "3"}, {{"1", "p"}, {"2", "p"}, {"2", "q"}, {"3", "q"}}); }

Infomorphism flat_info() {
  TypeDomain a2({"u", "w"}, {"a", "b", "c", "d"}, {{"a", "u"}, {"b", "u"}, {"b", "w"}, {"c", "w"}, {"d", "u"}});
  return Infomorphism(a2, flat(), SetFn({"u", "w"}, {"p", "q"}, {{"u", "p"}, {"w", "q"}}),
                      SetFn({"1", "2", "3"}, {"a", "b", "c", "d"}, {{"1", "a"}, {"2", "b"}, {"3", "c"}}));
}

// Brute force: every map I -> Y, filtered by incidence.
std::size_t count_tuples_naive(const SignedDomain& d) {
  std::size_t count = 0;
  for_each_function(d.signature.arity, d.types.values, [&](const SetFn& t) {
    bool ok = true;
    for (const auto& [i, v] : t.map) ok = ok && d.types.holds(v, d.signature.sort_of(i));
    count += ok;
  });
  return count;
}

std::vector<TableMorphism> homs(const Table& a, const Table& b) { return table_morphisms(a, b); }

}  // namespace

TEST_CASE("infomorphism fundamental condition") {
  auto fg = flat_info();
  for (const auto& y1 : fg.target.values)
    for (const auto& x2 : fg.source.sorts)
      CHECK(fg.target.holds(y1, fg.sort_fn(x2)) == fg.source.holds(fg.value_fn(y1), x2));
  TypeDomain bad({"u", "w"}, {"a", "b", "c", "d"}, {{"a", "u"}});
  CHECK_THROWS_AS(Infomorphism(bad, flat(), fg.sort_fn, fg.value_fn), Error);
  CHECK(compose(Infomorphism::identity(fg.source), fg) == fg);
  CHECK(compose(fg, Infomorphism::identity(fg.target)) == fg);
  Rng rng(7);
  for (int n = 0; n < 100; ++n) CHECK_NOTHROW(random_infomorphism(rng));
}

TEST_CASE("tup_set") {
  auto a = flat();
  SignedDomain empty(Signature({}, {}, a.sorts), a);
  CHECK(tup_set(empty).size() == 1);
  SignedDomain one(Signature::of({{"a", "p"}}, a.sorts), a);
  CHECK(tup_set(one).size() == 2);
  SignedDomain two(Signature::of({{"a", "p"}, {"b", "q"}}, a.sorts), a);
  CHECK(tup_set(two).size() == 4);
  CHECK(tup_set(two).size() == count_tuples_naive(two));
  auto ts = tup_set(two);
  CHECK(std::is_sorted(ts.begin(), ts.end()));
  Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    auto td = random_type_domain(rng, 3, 4, "x", "", true);
    SignedDomain d(random_signature(rng, td.sorts, 3), td);
    CHECK(tup_set(d).size() == count_tuples_naive(d));
  }
}

TEST_CASE("tup_fn is contravariantly functorial") {
  auto a = flat();
  auto s1 = Signature::of({{"a", "p"}, {"b", "q"}}, a.sorts);
  auto s2 = Signature::of({{"c", "p"}}, a.sorts);
  auto s3 = Signature::of({{"d", "p"}, {"e", "p"}}, a.sorts);
  SignedDomain d1(s1, a), d2(s2, a), d3(s3, a);
  auto u = SignedDomainMorphism::over(a, SignatureMorphism::sorted(s2, s1, {{"c", "a"}}));
  auto v = SignedDomainMorphism::over(a, SignatureMorphism::sorted(s3, s2, {{"d", "c"}, {"e", "c"}}));
  for (const auto& t : tup_set(d1)) {
    CHECK(tup_fn(SignedDomainMorphism::identity(d1), t) == t);
    auto r = tup_fn(u, t);
    CHECK(r == Tuple{{"c", t.at("a")}});
    CHECK(d2.admits(r));
    CHECK(tup_fn(compose(v, u), t) == tup_fn(v, tup_fn(u, t)));
  }
  // across an infomorphism
  auto fg = flat_info();
  auto sig1 = Signature::of({{"a", "p"}}, fg.target.sorts);
  auto sig2 = Signature::of({{"z", "u"}}, fg.source.sorts);
  SignedDomainMorphism m(SignatureMorphism(sig2, sig1, SetFn({"z"}, {"a"}, {{"z", "a"}}), fg.sort_fn), fg);
  for (const auto& t : tup_set(SignedDomain(sig1, fg.target))) CHECK(SignedDomain(sig2, fg.source).admits(tup_fn(m, t)));
}

TEST_CASE("tables, table morphisms and projections") {
  auto a = flat();
  auto s = Signature::of({{"a", "p"}}, a.sorts);
  SignedDomain d(s, a);
  CHECK_THROWS_AS(Table(d, {"k"}, {{"k", {{"a", "3"}}}}), Error);
  Table t1(d, {"k1", "k2"}, {{"k1", {{"a", "1"}}}, {"k2", {{"a", "2"}}}});
  Table t2(d, {"m1", "m2"}, {{"m1", {{"a", "1"}}}, {"m2", {{"a", "2"}}}});
  auto m = TableMorphism::over(t1, t2, {{"a", "a"}}, {{"k1", "m1"}, {"k2", "m2"}});
  CHECK_THROWS_AS(TableMorphism::over(t1, t2, {{"a", "a"}}, {{"k1", "m2"}, {"k2", "m2"}}), Error);
  CHECK(key(t1) == FinSet{"k1", "k2"});
  auto term = terminal_table(a);
  CHECK(dom(term).signature.arity.empty());
  CHECK(dom(term).types == a);
  auto back = TableMorphism::over(t2, t1, {{"a", "a"}}, {{"m1", "k1"}, {"m2", "k2"}});
  auto mm = compose(m, back);
  CHECK(key(mm) == compose(key(m), key(back)));
  CHECK(sign(mm) == compose(sign(back), sign(m)));
  CHECK(mm == TableMorphism::identity(t1));
  CHECK(homs(t1, t2).size() == 1);
  CHECK(homs(t1, term).size() == 1);
}

TEST_CASE("Sigma_f and f^* on examples") {
  FinSet x{"p", "q"};
  auto id = SetFn::identity(x);
  auto s = Signature::of({{"a", "p"}, {"b", "q"}}, x);
  CHECK(sigma_f(id, s) == s);
  CHECK(f_star(id, s).arity.size() == 2);
  auto adj = list_fiber_adjunction(id);
  CHECK(adj.unit(s).arity_map.map == std::map<Id, Id>{{"a", pair_id("a", "p")}, {"b", pair_id("b", "q")}});
  FinSet x2{"s", "t", "u"};
  SetFn constant(x2, {"p"}, {{"s", "p"}, {"t", "p"}, {"u", "p"}});
  auto sp = Signature::of({{"a", "p"}, {"b", "p"}}, {"p"});
  CHECK(f_star(constant, sp).arity.size() == 6);
}

TEST_CASE("Sigma_f -| f^*: triangles and exhaustive hom bijections") {
  Rng rng(21);
  for (int n = 0; n < 10; ++n) {
    FinSet x2(names("s", uniform(rng, 1, 3))), x1(names("x", uniform(rng, 1, 3)));
    std::map<Id, Id> fm;
    for (const auto& s : x2) fm[s] = pick(rng, x1.elements());
    SetFn f(x2, x1, fm);
    auto adj = list_fiber_adjunction(f);
    auto lows = all_signatures(x2, 2), highs = all_signatures(x1, 2);
    CHECK(adj.check_triangles(lows, highs).ok());
    for (const auto& a : lows)
      for (const auto& b : highs) {
        auto r = adj.check_hom_bijection(a, b, sorted_morphisms(sigma_f(f, a), b), sorted_morphisms(a, f_star(f, b)));
        REQUIRE(r.ok());
      }
  }
}

TEST_CASE("tbl acute and grave") {
  auto a = flat();
  auto ident = Infomorphism::identity(a);
  Table t(SignedDomain(Signature::of({{"a", "p"}}, a.sorts), a), {"k1", "k2"}, {{"k1", {{"a", "1"}}}, {"k2", {{"a", "2"}}}});
  auto up = tbl_acute(ident, t);
  CHECK(up.keys == t.keys);
  CHECK(up.signature().arity.size() == 1);
  auto down = tbl_grave(ident, t);
  CHECK(down.keys.size() == t.keys.size());
  auto adj = tbl_fiber_adjunction(ident);
  CHECK(adj.check_triangles({t}, {t}).ok());

  // one-value extent relabelled by g
  TypeDomain a1({"p"}, {"y"}, {{"y", "p"}});
  TypeDomain a2({"s"}, {"z"}, {{"z", "s"}});
  Infomorphism fg(a2, a1, SetFn({"s"}, {"p"}, {{"s", "p"}}), SetFn({"y"}, {"z"}, {{"y", "z"}}));
  Table t1(SignedDomain(Signature::of({{"a", "p"}}, a1.sorts), a1), {"k"}, {{"k", {{"a", "y"}}}});
  auto t2 = tbl_acute(fg, t1);
  CHECK(t2.keys == t1.keys);
  CHECK(t2.rows.at("k") == Tuple{{pair_id("a", "s"), "z"}});
}

TEST_CASE("tbl acute -| grave: triangles and hom bijections on random instances") {
  Rng rng(5);
  for (int n = 0; n < 15; ++n) {
    auto fg = random_infomorphism(rng);
    auto adj = tbl_fiber_adjunction(fg);
    std::vector<Table> ones, twos;
    for (int j = 0; j < 4; ++j) {
      ones.push_back(random_table(rng, SignedDomain(random_signature(rng, fg.target.sorts, 2), fg.target), 3));
      twos.push_back(random_table(rng, SignedDomain(random_signature(rng, fg.source.sorts, 2), fg.source), 3));
    }
    REQUIRE(adj.check_triangles(ones, twos).ok());
    for (const auto& t1 : ones)
      for (const auto& t2 : twos) {
        auto r = adj.check_hom_bijection(t1, t2, homs(tbl_acute(fg, t1), t2), homs(t1, tbl_grave(fg, t2)));
        REQUIRE(r.ok());
      }
    // functoriality on sampled morphisms
    for (const auto& t1 : ones)
      for (const auto& t1b : ones)
        for (const auto& m : homs(t1, t1b)) {
          auto am = tbl_acute(fg, m);
          CHECK(am.key_map == m.key_map);
        }
  }
}

TEST_CASE("tuple bridges and their interdefinitions") {
  auto fg = flat_info();
  const auto& f = fg.sort_fn;
  auto s1 = Signature::of({{"a", "p"}, {"b", "q"}}, fg.target.sorts);
  auto s2 = Signature::of({{"z", "u"}, {"y", "w"}}, fg.source.sorts);
  for (const auto& t : tup_set(SignedDomain(s1, fg.target))) {
    auto lhs = tau_acute(fg, s1, t);
    auto via = tau_grave(fg, f_star(f, s1), restrict(list_counit(f, s1), t));
    CHECK(lhs == via);
    CHECK(SignedDomain(f_star(f, s1), fg.source).admits(lhs));
  }
  for (const auto& t : tup_set(SignedDomain(sigma_f(f, s2), fg.target))) {
    auto lhs = tau_grave(fg, s2, t);
    auto via = restrict(list_unit(f, s2), tau_acute(fg, sigma_f(f, s2), t));
    CHECK(lhs == via);
  }
  // naturality of the acute bridge along a nonidentity morphism
  auto s1b = Signature::of({{"c", "p"}}, fg.target.sorts);
  auto h = SignatureMorphism::sorted(s1b, s1, {{"c", "a"}});
  for (const auto& t : tup_set(SignedDomain(s1, fg.target)))
    CHECK(tau_acute(fg, s1b, restrict(h, t)) == restrict(f_star(f, h), tau_acute(fg, s1, t)));
  auto ident = Infomorphism::identity(fg.target);
  for (const auto& t : tup_set(SignedDomain(s1, fg.target))) CHECK(tau_grave(ident, s1, t) == t);
}

TEST_CASE("inclusion bridges and their interdefinitions") {
  Rng rng(9);
  auto check_for = [&](const Infomorphism& fg) {
    const auto& f = fg.sort_fn;
    auto inc2 = list_inclusion(fg.source);
    auto inc1 = list_inclusion(fg.target);
    for (int j = 0; j < 4; ++j) {
      auto s2 = random_signature(rng, fg.source.sorts, 3);
      auto s1 = random_signature(rng, fg.target.sorts, 3);
      CHECK(iota_acute(fg, s2) == compose(inc2.map(list_unit(f, s2)), iota_grave(fg, sigma_f(f, s2))));
      CHECK(iota_grave(fg, s1) == compose(iota_acute(fg, f_star(f, s1)), inc1.map(list_counit(f, s1))));
      auto t1 = random_table(rng, SignedDomain(s1, fg.target), 3);
      auto t2 = random_table(rng, SignedDomain(s2, fg.source), 3);
      CHECK(chi_acute(fg, t1) == compose(tbl_unit(fg, t1), chi_grave(fg, tbl_acute(fg, t1))));
      CHECK(chi_grave(fg, t2) == compose(chi_acute(fg, tbl_grave(fg, t2)), tbl_counit(fg, t2)));
    }
  };
  check_for(flat_info());
  for (int n = 0; n < 20; ++n) check_for(random_infomorphism(rng));
  auto ident = Infomorphism::identity(flat());
  auto s = Signature::of({{"a", "p"}}, flat().sorts);
  CHECK(iota_acute(ident, s) == SignedDomainMorphism::identity(SignedDomain(s, flat())));
}
