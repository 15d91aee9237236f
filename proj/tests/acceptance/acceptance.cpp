#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "fole/core/fiber.hpp"
#include "fole/diagrams/levo_dextro.hpp"
#include "fole/univ/db_universal.hpp"
#include "fole/univ/grothendieck.hpp"
#include "fole/univ/list_limits.hpp"
#include "fole/univ/oracle.hpp"
#include "fole/univ/tbl_limits.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/groth_gen.hpp"
#include "support/kan_check.hpp"
#include "support/levo_gen.hpp"
#include "support/oracles.hpp"
#include "support/run.hpp"

using namespace fole;
using namespace fole::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void need(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    ok = false;
    if (failures.size() < 5) failures.push_back(what);
  }
  void absorb(const CheckReport& r, const std::string& where) {
    for (const auto& f : r.failures) fail(where + ": " + f);
  }
};

bool run_criterion(int number, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_s) o.fail("took " + std::to_string(secs) + "s");
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, limit_s);
  std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << number << ". " << title << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << " " << o.detail;
  std::cout << "\n";
  for (const auto& f : o.failures) std::cout << "       " << f << "\n";
  std::cout.flush();
  return o.ok;
}

std::string count(const std::string& what, std::size_t n) { return std::to_string(n) + " " + what; }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Three-arrow shapes: a chain, a star into one table, and a commuting-free triangle.
std::vector<FinCategory> join_shapes() {
  return {cospan_shape(), chain_shape(), free_on_acyclic_graph({"a", "b", "c", "d"}, {{"u", "a", "d"}, {"v", "b", "d"}, {"w", "c", "d"}}),
          free_on_acyclic_graph({"a", "b", "c"}, {{"u", "a", "b"}, {"v", "b", "c"}, {"w", "a", "c"}})};
}

struct JoinInstance {
  Database db;
  LimitResult<TblA> join;
};

HomEnumerator<TblA> tbl_homs() { return [](const Table& a, const Table& b) { return table_morphisms(a, b); }; }

Outcome join_oracle(std::vector<JoinInstance>& out) {
  Outcome o;
  Rng rng(1001);
  auto shapes = join_shapes();
  std::size_t keys = 0, nonempty = 0;
  for (int n = 0; n < 200; ++n) {
    auto a = random_type_domain(rng, 3, 4);
    auto db = random_database(rng, shapes[n % shapes.size()], a, 4, 3, n % 4 ? 1 : 0);
    auto j = limit_tbl(db);
    o.absorb(compare_join(db, j.cone), "database " + std::to_string(n));
    keys += j.vertex().keys.size();
    nonempty += !j.vertex().keys.empty();
    out.push_back({db, j});
  }
  o.detail = count("databases", out.size()) + ", " + count("nonempty joins", nonempty) + ", " + count("join keys", keys);
  return o;
}

Outcome join_signature(const std::vector<JoinInstance>& instances) {
  Outcome o;
  for (std::size_t n = 0; n < instances.size(); ++n) {
    const auto& [db, j] = instances[n];
    auto colim = colimit_in_listX(sorted_schema(db, require_fixed(db).sorts));
    o.need(j.vertex().signature() == colim.vertex(), "database " + std::to_string(n) + ": join signature differs");
  }
  o.detail = count("instances", instances.size());
  return o;
}

// Draws candidate vertices until at least 50 cones have been checked for the instance.
template <class Draw>
std::size_t tbl_universality(Outcome& o, const LimitResult<TblA>& u, Draw draw, const std::string& where) {
  std::size_t cones = 0;
  for (int attempt = 0; attempt < 400 && cones < 50; ++attempt) {
    CheckReport r = check_universality(u, std::vector<Table>{draw()}, tbl_homs(), &cones);
    o.absorb(r, where);
  }
  o.need(cones >= 50, where + ": only " + std::to_string(cones) + " cones found");
  return cones;
}

Outcome universal_properties() {
  Outcome o;
  Rng rng(2002);
  auto start = std::chrono::steady_clock::now();
  std::size_t join_cones = 0, sum_cones = 0, db_cones = 0;
  auto shapes = std::vector<FinCategory>{cospan_shape(), chain_shape(), span_shape()};
  for (int n = 0; n < 6; ++n) {
    auto a = random_type_domain(rng, 2, 3);
    auto db = random_database(rng, shapes[n % shapes.size()], a, 3, 2);
    auto j = limit_tbl(db);
    join_cones += tbl_universality(
        o, j,
        [&] {
          if (coin(rng, 0.8)) return random_extension(rng, j.vertex(), 3, 1);
          return random_table(rng, SignedDomain(random_signature(rng, a.sorts, 2), a), 3);
        },
        "join " + std::to_string(n));
    auto s = colimit_tbl(db);
    sum_cones += tbl_universality(
        o, s,
        [&] {
          if (coin(rng, 0.9)) return random_quotient(rng, s.vertex(), 1);
          return terminal_table(a);
        },
        "sum " + std::to_string(n));
  }

  double tables_s = seconds_since(start);
  start = std::chrono::steady_clock::now();
  auto a = join_types();
  auto line = free_on_acyclic_graph({"a", "b"}, {{"u", "a", "b"}});
  auto point = discrete_category({"a"});
  auto small = [&](const FinCategory& shape) { return random_database(rng, shape, a, 3, 1); };
  auto random_w = [&] { return small(coin(rng) ? line : point); };

  std::size_t init_cones = 0;
  for (int n = 0; n < 50; ++n) {
    auto w = random_w();
    auto homs = database_morphisms(db_initial(), w);
    o.need(homs.size() == 1, "initial: " + std::to_string(homs.size()) + " morphisms into a candidate");
    o.need(homs.size() == 1 && homs.front() == initial_morphism(w), "initial: mediator differs");
    ++init_cones;
  }

  for (int n = 0; n < 4; ++n) {
    auto d1 = small(point);
    auto d2 = small(coin(rng) ? line : point);
    auto where = "coproduct " + std::to_string(n);
    auto cp = db_coproduct(d1, d2);
    std::size_t cones = 0;
    for (int attempt = 0; attempt < 400 && cones < 50; ++attempt) {
      auto w = random_w();
      auto from_sum = database_morphisms(cp.sum, w);
      auto legs2 = database_morphisms(d2, w);
      for (const auto& c1 : database_morphisms(d1, w))
        for (const auto& c2 : legs2) {
          ++cones;
          auto m = cp.copair(c1, c2);
          o.need(compose_database_morphisms(cp.inj1, m) == c1 && compose_database_morphisms(cp.inj2, m) == c2,
                 where + ": copairing does not factor");
          std::size_t hits = 0;
          for (const auto& x : from_sum)
            if (compose_database_morphisms(cp.inj1, x) == c1 && compose_database_morphisms(cp.inj2, x) == c2) ++hits;
          o.need(hits == 1, where + ": " + std::to_string(hits) + " factorizations");
        }
    }
    o.need(cones >= 50, where + ": only " + std::to_string(cones) + " cocones");
    db_cones += cones;
  }

  // Products are taken against databases that share a table with d1, so that cones with a common bridge exist.
  for (int n = 0; n < 4; ++n) {
    auto d1 = small(point);
    auto d2 = n % 2 ? db_coproduct(d1, small(line)).sum : d1;
    auto where = "product " + std::to_string(n);
    auto pr = db_product(d1, d2);
    std::size_t cones = 0;
    for (int attempt = 0; attempt < 400 && cones < 50; ++attempt) {
      auto w = random_w();
      auto into = database_morphisms(w, pr.product);
      auto legs2 = database_morphisms(w, d2);
      for (const auto& c1 : database_morphisms(w, d1))
        for (const auto& c2 : legs2) {
          std::size_t hits = 0;
          for (const auto& x : into)
            if (compose_database_morphisms(x, pr.proj1) == c1 && compose_database_morphisms(x, pr.proj2) == c2) ++hits;
          bool same_bridge = c1.bridge.components() == c2.bridge.components();
          if (!same_bridge) {
            o.need(hits == 0, where + ": a cone with different bridges factors");
            bool refused = false;
            try {
              pr.pair(c1, c2);
            } catch (const Error& e) {
              refused = e.code() == Errc::NoMediator;
            }
            o.need(refused, where + ": pairing accepted legs with different bridges");
            continue;
          }
          ++cones;
          auto m = pr.pair(c1, c2);
          o.need(compose_database_morphisms(m, pr.proj1) == c1 && compose_database_morphisms(m, pr.proj2) == c2,
                 where + ": pairing does not factor");
          o.need(hits == 1, where + ": " + std::to_string(hits) + " factorizations");
        }
    }
    o.need(cones >= 50, where + ": only " + std::to_string(cones) + " cones");
    db_cones += cones;
  }
  o.detail = count("join cones", join_cones) + ", " + count("sum cocones", sum_cones) + ", " +
             count("initial cocones", init_cones) + ", " + count("database (co)cones", db_cones) + "; tables " +
             std::to_string(tables_s).substr(0, 4) + "s, databases " + std::to_string(seconds_since(start)).substr(0, 4) + "s";
  return o;
}

Outcome fiber_adjunctions() {
  Outcome o;
  Rng rng(3003);
  std::size_t sig_pairs = 0, tbl_pairs = 0, homs_checked = 0, direct_checked = 0;
  for (int n = 0; n < 50; ++n) {
    // Two values in A1 keep grave(acute(T1)) materializable: its keys grow as |g^-1|^(|X2| |I|).
    auto fg = random_infomorphism_to(rng, random_type_domain(rng, 3, 2), 3, 4);
    auto where = "infomorphism " + std::to_string(n);
    const auto& f = fg.sort_fn;
    auto ladj = list_fiber_adjunction(f);
    auto lows = all_signatures(fg.source.sorts, 3), highs = all_signatures(fg.target.sorts, 3);
    o.absorb(ladj.check_triangles(lows, highs), where + " signatures");
    for (const auto& s2 : lows)
      for (const auto& s1 : highs) {
        auto left = sorted_morphisms(sigma_f(f, s2), s1);
        homs_checked += left.size();
        o.absorb(ladj.check_hom_bijection(s2, s1, left, sorted_morphisms(s2, f_star(f, s1))), where + " signatures");
        ++sig_pairs;
      }

    auto tadj = tbl_fiber_adjunction(fg);
    std::vector<Table> ones, twos;
    for (int k = 0; k < 4; ++k) {
      ones.push_back(random_table(rng, SignedDomain(random_signature(rng, fg.target.sorts, 3), fg.target), 3));
      twos.push_back(random_table(rng, SignedDomain(random_signature(rng, fg.source.sorts, 3), fg.source), 3));
    }
    o.absorb(tadj.check_triangles(ones, twos), where + " tables");
    for (const auto& t1 : ones)
      for (const auto& t2 : twos) {
        auto left = table_morphisms(tbl_acute(fg, t1), t2);
        homs_checked += left.size();
        o.absorb(tadj.check_hom_bijection(t1, t2, left, table_morphisms(t1, tbl_grave(fg, t2))), where + " tables");
        std::vector<TableMorphism> probe;
        std::size_t stride = tbl_grave(fg, tbl_acute(fg, t1)).keys.size() <= 256 ? 1 : std::max<std::size_t>(1, left.size() / 16);
        for (std::size_t i = 0; i < left.size(); i += stride) probe.push_back(left[i]);
        direct_checked += probe.size();
        o.absorb(tadj.check_direct_right(t1, probe), where + " closed-form transpose");
        ++tbl_pairs;
      }
  }
  o.detail = count("signature pairs", sig_pairs) + ", " + count("table pairs", tbl_pairs) + ", " +
             count("transposed morphisms", homs_checked) + ", " + count("closed-form agreements", direct_checked);
  return o;
}

Outcome kan_extensions() {
  Outcome o;
  auto cats = small_categories();
  KanTally tally;
  std::size_t passages = 0;
  for (std::size_t a = 0; a < cats.size(); ++a) {
    auto on2 = all_set_functors(cats[a], 2);
    for (std::size_t b = 0; b < cats.size(); ++b) {
      auto on1 = all_set_functors(cats[b], 2);
      auto where = "categories " + std::to_string(a) + " -> " + std::to_string(b);
      for (const auto& k : all_passages(cats[a], cats[b])) {
        ++passages;
        std::vector<Passage<SetCat>> restricted;
        for (const auto& s1 : on1) restricted.push_back(compose_passages(k, s1));
        for (const auto& s : on2) {
          o.absorb(check_lan_universal(k, s, on1, &tally, &restricted), where);
          o.absorb(check_ran_universal(k, s, on1, &tally, &restricted), where);
        }
        o.absorb(check_kan_triangles(k, on2, on1), where);
      }
    }
  }
  o.detail = count("passages", passages) + ", " + count("extensions", tally.extensions) + ", " +
             count("factorizations", tally.factorizations);
  return o;
}

Outcome grothendieck_suite() {
  Outcome o;
  Rng rng(6006);
  auto indices = index_pool();
  auto shapes = diagram_shapes();
  std::size_t compared = 0, absent = 0;
  for (int n = 0; n < 100; ++n) {
    auto where = "instance " + std::to_string(n);
    auto ix = random_indexed_adjunction(rng, pick(rng, indices), 4);
    o.absorb(check_indexed_adjunction(ix), where);
    for (auto conv : {GrothConvention::Fibration, GrothConvention::Opfibration}) {
      auto t = grothendieck(ix, conv);
      for (int k = 0; k < 2; ++k) {
        auto d = random_diagram(rng, pick(rng, shapes), t.category);
        if (!d) continue;
        for (auto kind : {ConeKind::Limit, ConeKind::Colimit}) {
          std::optional<LimitResult<FinCategory>> oracle;
          try {
            oracle = oracle_universal(*d, kind);
          } catch (const Error&) {
          }
          auto run = [&] { return kind == ConeKind::Limit ? groth_structured_limit(t, *d) : groth_structured_colimit(t, *d); };
          if (!oracle) {
            ++absent;
            bool threw = false;
            try {
              run();
            } catch (const Error&) {
              threw = true;
            }
            o.need(threw, where + ": structured construction found a cone the oracle says is absent");
            continue;
          }
          ++compared;
          auto s = run();
          o.need(is_universal(s.cone), where + ": structured cone is not universal");
          o.need(factorizations(oracle->cone, s.cone).size() == 1 && factorizations(s.cone, oracle->cone).size() == 1,
                 where + ": structured and oracle cones are not canonically isomorphic");
          o.absorb(check_continuity(t.projection, *d, kind), where + " projection");
        }
      }
    }
  }
  o.detail = count("comparisons", compared) + ", " + count("absent (co)limits", absent);
  return o;
}

Outcome levo_dextro_suite() {
  Outcome o;
  Rng rng(7007);
  for (int n = 0; n < 100; ++n) {
    auto where = "database morphism " + std::to_string(n);
    auto m = random_over(rng);
    auto adj = tbl_fiber_adjunction(m.types);
    auto dextro = db_levo_to_dextro(m, &adj);
    auto levo = db_dextro_to_levo(m, dextro, &adj);
    o.need(levo == m.levo, where + ": levo round trip");
    auto again = make_over(m.from, m.to, m.shape_map, m.types, levo.components());
    o.need(db_levo_to_dextro(again, &adj) == dextro, where + ": dextro round trip");
    auto via_levo = include_db_in_DB(m);
    o.need(via_levo == include_dextro_in_DB(m, dextro), where + ": composites differ");
    o.absorb(check_database_morphism(via_levo), where);
  }
  for (int n = 0; n < 100; ++n) {
    auto where = "schemed morphism " + std::to_string(n);
    auto m = random_schemed_over(rng);
    auto adj = list_fiber_adjunction(m.types.sort_fn);
    auto dextro = schemed_levo_to_dextro(m, &adj);
    auto levo = schemed_dextro_to_levo(m, dextro, &adj);
    o.need(levo == m.levo, where + ": levo round trip");
    SchemedMorphismOver again{m.from, m.to, m.shape_map, m.types, levo};
    o.need(schemed_levo_to_dextro(again, &adj) == dextro, where + ": dextro round trip");
    o.need(schemed_composite_from_levo(m) == schemed_composite_from_dextro(m, dextro), where + ": composites differ");
  }
  for (int n = 0; n < 20; ++n) {
    auto second = random_over(rng);
    auto fg = random_infomorphism_to(rng, second.types.source, 3, 4);
    auto first = random_over_into(rng, second.from, fg);
    auto both = include_db_in_DB(compose_over(first, second));
    o.need(both == compose_database_morphisms(include_db_in_DB(first), include_db_in_DB(second)), "composite inclusion");
    o.absorb(check_database_morphism(both), "composite inclusion");
  }
  o.detail = "100 database morphisms, 100 schemed morphisms, 20 composites";
  return o;
}

Outcome cli_suite() {
  Outcome o;
  const std::string cli = FOLE_CLI, fixtures = FOLE_CLI_FIXTURES, golden = FOLE_CLI_GOLDEN;
  auto invoke = [&](const std::string& args) { return run_command(cli + " " + args); };
  auto ws = "--workspace " + fixtures + "/join_fixture.json";
  std::size_t runs = 0;
  for (int n = 0; n < 2; ++n) {
    for (const auto& [args, file] : std::vector<std::pair<std::string, std::string>>{
             {" join D", "join_fixture.json"}, {" join D --format csv", "join_fixture.csv"}, {" sum D --format csv", "sum_fixture.csv"}}) {
      auto r = invoke(ws + args);
      ++runs;
      o.need(r.exit_code == 0, "join fixture" + args + ": exit " + std::to_string(r.exit_code));
      o.need(r.out == read_file(golden + "/" + file), "join fixture" + args + ": output differs from " + file);
    }
  }
  struct Case {
    std::string args;
    int code;
  };
  std::vector<Case> cases{
      {"--workspace " + fixtures + "/morphisms.json check Keep", 0},
      {"--workspace " + fixtures + "/morphisms.json check Corrupt", 1},
      {"--workspace " + fixtures + "/bad_tuple.json join D", 2},
      {"--workspace " + fixtures + "/missing.json join D", 2},
      {ws + " join Nope", 2},
      {ws + " frobnicate", 2},
      {ws + " project D --which key --format csv", 2},
  };
  for (const auto& c : cases) {
    auto r = invoke(c.args);
    ++runs;
    o.need(r.exit_code == c.code, c.args + ": exit " + std::to_string(r.exit_code) + ", expected " + std::to_string(c.code));
  }
  o.detail = count("invocations", runs);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int n = 1; n < argc; ++n) only.insert(std::atoi(argv[n]));
  auto wanted = [&](int n) { return only.empty() || only.count(n); };
  bool all = true;
  std::vector<JoinInstance> joins;
  if (wanted(1) || wanted(2))
    all &= run_criterion(1, "join agrees with the nested-loop oracle", 30, [&] { return join_oracle(joins); });
  if (wanted(2)) all &= run_criterion(2, "join signature is the schema colimit", 5, [&] { return join_signature(joins); });
  if (wanted(3)) all &= run_criterion(3, "universal properties of joins, sums and database constructions", 60, universal_properties);
  if (wanted(4)) all &= run_criterion(4, "fiber adjunctions on signatures and tables", 60, fiber_adjunctions);
  if (wanted(5)) all &= run_criterion(5, "Kan extensions are universal and adjoint", 60, kan_extensions);
  if (wanted(6)) all &= run_criterion(6, "Grothendieck (co)limits and projection continuity", 120, grothendieck_suite);
  if (wanted(7)) all &= run_criterion(7, "levo and dextro forms", 30, levo_dextro_suite);
  if (wanted(8)) all &= run_criterion(8, "CLI golden outputs and exit codes", 5, cli_suite);
  return all ? 0 : 1;
}
