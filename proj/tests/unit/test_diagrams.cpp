#include <catch_amalgamated.hpp>

#include "fole/diagrams/levo_dextro.hpp"
#include "fole/univ/db_universal.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/levo_gen.hpp"

using namespace fole;
using namespace fole::testing;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::UnknownId;
}

FinSet sorts_pq() { return FinSet{"p", "q"}; }

// Two-arrow chain schema a -> b -> c with signatures growing along the arrows.
SortedSchema chain_schema() {
  auto x = sorts_pq();
  auto sa = Signature::of({{"i", "p"}}, x);
  auto sb = Signature::of({{"j", "p"}, {"k", "q"}}, x);
  auto sc = Signature::of({{"l", "p"}, {"m", "q"}}, x);
  auto shape = free_on_acyclic_graph({"a", "b", "c"}, {{"u", "a", "b"}, {"v", "b", "c"}});
  return SortedSchema::from_generators(shape, ListX(x), {{"a", sa}, {"b", sb}, {"c", sc}},
                                       {{"u", SignatureMorphism::sorted(sa, sb, {{"i", "j"}})},
                                        {"v", SignatureMorphism::sorted(sb, sc, {{"j", "l"}, {"k", "m"}})}});
}

Schema as_schema(const SortedSchema& s) { return apply_functor(s, sorted_inclusion(s.target())); }

}  // namespace

TEST_CASE("schema projections pick arity and sorts and respect composition") {
  auto x = sorts_pq();
  auto one = free_on_acyclic_graph({"r"}, {});
  auto sig = Signature::of({{"a", "p"}, {"b", "q"}}, x);
  Schema s(one, ListCat{}, {{"r", sig}}, {{"id_r", SignatureMorphism::identity(sig)}});
  CHECK(arity_projection(s).object("r") == sig.arity);
  CHECK(sort_projection(s).object("r") == x);

  auto chain = as_schema(chain_schema());
  auto id = SchemaMorphism::identity(chain);
  CHECK(arity_projection(id) == LaxMorphism<SetCat>::identity(arity_projection(chain)));
  CHECK(sort_projection(id) == LaxMorphism<SetCat>::identity(sort_projection(chain)));

  // collapse the chain onto its last object: sigma at r is the chain's arrow r -> c
  auto shape = chain.source();
  Passage<FinCategory> to_c(shape, shape, {{"a", "c"}, {"b", "c"}, {"c", "c"}},
                            {{"id_a", "id_c"}, {"id_b", "id_c"}, {"id_c", "id_c"}, {"u", "id_c"}, {"v", "id_c"}, {"u;v", "id_c"}});
  Bridge<ListCat> sigma(chain, compose_passages(to_c, chain),
                        {{"a", chain.morphism("u;v")}, {"b", chain.morphism("v")}, {"c", chain.morphism("id_c")}});
  SchemaMorphism m(chain, chain, to_c, sigma);
  auto mm = compose_schema_morphisms(m, m);
  CHECK(arity_projection(mm) == compose_lax(arity_projection(m), arity_projection(m)));
  CHECK(sort_projection(mm) == compose_lax(sort_projection(m), sort_projection(m)));
  CHECK(compose_schema_morphisms(m, id) == m);
  CHECK(compose_schema_morphisms(id, m) == m);
}

TEST_CASE("schemed domains project to signatures and type domains and reconstruct") {
  auto a = join_types();
  auto db = join_fixture();
  auto q = dom_projection(db);
  auto data = data_projection(q);
  for (const auto& r : q.source().objects()) CHECK(data.object(r) == a);
  for (const auto& u : q.source().morphisms()) CHECK(data.morphism(u.id) == Infomorphism::identity(a));
  CHECK(reconstruct(sign_projection(q), data) == q);

  auto other = TypeDomain(FinSet{"p", "q"}, FinSet{"1"}, {{"1", "p"}});
  auto bad = constant_passage<ClsCat>(q.source(), ClsCat{}, other);
  CHECK(code_of([&] { reconstruct(sign_projection(q), bad); }) == Errc::SortDiagramMismatch);

  auto id = SchemedDomainMorphism::identity(q);
  CHECK(sign_projection(id) == SchemaMorphism::identity(sign_projection(q)));
}

TEST_CASE("database projections and the derived tuple bridge") {
  auto a = join_types();
  auto t = single_column_table(a, "a", {{"k1", "1"}, {"k2", "2"}});
  auto single = single_table_database(t);
  CHECK(key_projection(single).object("r") == t.keys);
  CHECK(dom_projection(single).object("r") == t.domain);
  CHECK(tuple_bridge(single).at("r")("k2") == tuple_text(t.row("k2")));

  auto db = join_fixture();
  auto keys = key_projection(db);
  CHECK(keys.source().objects().size() == 3);
  CHECK(keys.object("R").size() == 3);
  CHECK(keys.morphism("mr")("r2") == "m1");
  auto tau = tuple_bridge(db);
  CHECK(tau.at("M")("m2") == tuple_text({{"c", "2"}}));

  // corrupt one key map: r2 now goes to m2 while its row still says 1
  auto corrupted = keys.morphism_map();
  auto bad = corrupted.at("mr").map;
  bad["r2"] = "m2";
  corrupted["mr"] = SetFn(keys.object("R"), keys.object("M"), bad);
  Passage<SetCat> bad_keys(keys.source(), SetCat{}, keys.object_map(), corrupted);
  CHECK(code_of([&] { Bridge<SetCat>(bad_keys, tuple_diagram(db), tau.components()); }) == Errc::NaturalityViolation);
  CHECK(code_of([&] {
          TableMorphism::over(db.table("R"), db.table("M"), {{"c", "b"}}, bad);
        }) == Errc::InvalidTable);
}

TEST_CASE("check_database_morphism reports exactly the faulty object") {
  auto db = join_fixture();
  auto id = DatabaseMorphism::identity(db);
  CHECK(check_database_morphism(id).ok());

  auto data = to_data(id);
  data.components.at("R").key_map["r1"] = "r3";
  auto rep = check_database_morphism(data);
  REQUIRE(rep.failures.size() >= 1);
  for (const auto& f : rep.failures) CHECK(f.find("'R'") != std::string::npos);
  CHECK(rep.failures.front().rfind("object 'R'", 0) == 0);
  CHECK(code_of([&] { realize(data); }) == Errc::ValidationError);

  // swapping m1 and m2 at M satisfies each tuple condition only if rows agree, which they do not
  auto swap = to_data(id);
  swap.components.at("M").key_map = {{"m1", "m2"}, {"m2", "m1"}};
  auto rep2 = check_database_morphism(swap);
  REQUIRE_FALSE(rep2.ok());
  CHECK(rep2.failures.front().rfind("object 'M'", 0) == 0);
}

TEST_CASE("database morphisms reject bridges typed in the lax direction") {
  auto a = join_types();
  auto big = single_column_table(a, "a", {{"k1", "1"}, {"k2", "2"}});
  auto small = single_column_table(a, "a", {{"k", "1"}});
  auto d1 = single_table_database(big);
  auto d2 = single_table_database(small);
  auto r = identity_passage(d1.shape());
  auto into = TableMorphism::over(small, big, {{"a", "a"}}, {{"k", "k1"}});
  // T2 => R^op;T1 is the lax direction
  Bridge<TblCat> lax(d2.tables(), d1.tables(), {{"r", into}});
  CHECK(code_of([&] { DatabaseMorphism(d2, d1, r, lax); }) == Errc::LaxDirectionBridge);
  CHECK(DatabaseMorphism(d1, d2, r, Bridge<TblCat>(d2.tables(), d1.tables(), {{"r", into}})).bridge.at("r") == into);
}

TEST_CASE("database morphism composition is associative and unital") {
  Rng rng(11);
  auto a = join_types();
  int triples = 0;
  for (int n = 0; n < 30 && triples < 10; ++n) {
    auto db = random_database(rng, span_shape(), a, 2, 1);
    auto ends = database_morphisms(db, db);
    if (ends.size() < 2) continue;
    ++triples;
    const auto& f = pick(rng, ends);
    const auto& g = pick(rng, ends);
    const auto& h = pick(rng, ends);
    auto id = DatabaseMorphism::identity(db);
    CHECK(compose_database_morphisms(id, f) == f);
    CHECK(compose_database_morphisms(f, id) == f);
    auto left = compose_database_morphisms(compose_database_morphisms(f, g), h);
    auto right = compose_database_morphisms(f, compose_database_morphisms(g, h));
    CHECK(left == right);
    CHECK(check_database_morphism(left).ok());
  }
  CHECK(triples == 10);
}

TEST_CASE("levo and dextro forms of database morphisms") {
  Rng rng(5);
  for (int n = 0; n < 25; ++n) {
    auto m = random_over(rng);
    auto adj = tbl_fiber_adjunction(m.types);
    auto dextro = db_levo_to_dextro(m, &adj);
    CHECK(db_dextro_to_levo(m, dextro, &adj) == m.levo);
    auto via_levo = include_db_in_DB(m);
    CHECK(via_levo == include_dextro_in_DB(m, dextro));
    CHECK(check_database_morphism(via_levo).ok());
  }
  auto m = random_over(rng);
  CHECK(code_of([&] { db_levo_to_dextro(m, nullptr); }) == Errc::MissingAdjunctionWitness);
}

TEST_CASE("identity and composition of morphisms over type domains include functorially") {
  Rng rng(8);
  auto db = random_database(rng, chain_shape(), join_types(), 3, 2);
  CHECK(include_db_in_DB(identity_over(db)) == DatabaseMorphism::identity(db));
  for (int n = 0; n < 10; ++n) {
    auto second = random_over(rng);
    auto fg = random_infomorphism_to(rng, second.types.source, 3, 4);
    auto first = random_over_into(rng, second.from, fg);
    auto both = compose_over(first, second);
    CHECK(include_db_in_DB(both) == compose_database_morphisms(include_db_in_DB(first), include_db_in_DB(second)));
    CHECK(check_database_morphism(include_db_in_DB(both)).ok());
    CHECK(include_db_in_DB(compose_over(identity_over(second.from), second)) == include_db_in_DB(second));
  }
}

TEST_CASE("levo and dextro forms of schemed-domain morphisms") {
  Rng rng(3);
  for (int n = 0; n < 25; ++n) {
    auto m = random_schemed_over(rng);
    auto adj = list_fiber_adjunction(m.types.sort_fn);
    auto dextro = schemed_levo_to_dextro(m, &adj);
    CHECK(schemed_dextro_to_levo(m, dextro, &adj) == m.levo);
    CHECK(schemed_composite_from_levo(m) == schemed_composite_from_dextro(m, dextro));
  }
  auto m = random_schemed_over(rng);
  CHECK(code_of([&] { schemed_levo_to_dextro(m, nullptr); }) == Errc::MissingAdjunctionWitness);
}
