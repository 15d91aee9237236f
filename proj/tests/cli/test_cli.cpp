#include <catch_amalgamated.hpp>

#include "support/run.hpp"

using namespace fole::testing;

namespace {

const std::string cli = FOLE_CLI;
const std::string fixtures = FOLE_CLI_FIXTURES;
const std::string golden = FOLE_CLI_GOLDEN;

RunResult invoke(const std::string& args) { return run_command(cli + " " + args); }

}  // namespace

TEST_CASE("join fixture output matches the golden files byte for byte", "[cli]") {
  auto ws = "--workspace " + fixtures + "/join_fixture.json";
  for (int n = 0; n < 2; ++n) {
    auto json = invoke(ws + " join D");
    CHECK(json.exit_code == 0);
    CHECK(json.out == read_file(golden + "/join_fixture.json"));
    auto csv = invoke(ws + " join D --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == read_file(golden + "/join_fixture.csv"));
    auto sum = invoke(ws + " sum D --format csv");
    CHECK(sum.out == read_file(golden + "/sum_fixture.csv"));
  }
  auto ran = invoke("--workspace " + fixtures + "/kan_groth.json kan Two --direction right --along AtU");
  CHECK(ran.out == read_file(golden + "/ran_point.json"));
}

TEST_CASE("exit codes follow the contract", "[cli]") {
  CHECK(invoke("--workspace " + fixtures + "/morphisms.json check Keep").exit_code == 0);
  auto bad = invoke("--workspace " + fixtures + "/morphisms.json check Corrupt");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("object 'r'") != std::string::npos);
  CHECK(invoke("--workspace " + fixtures + "/bad_tuple.json join D").exit_code == 2);
  CHECK(invoke("--workspace " + fixtures + "/missing.json join D").exit_code == 2);
  CHECK(invoke("--workspace " + fixtures + "/join_fixture.json join Nope").exit_code == 2);
  CHECK(invoke("--workspace " + fixtures + "/join_fixture.json frobnicate").exit_code == 2);
  CHECK(invoke("--workspace " + fixtures + "/join_fixture.json project D --which key --format csv").exit_code == 2);
  CHECK(invoke("--workspace " + fixtures + "/kan_groth.json groth Lift --convention opfibration").exit_code == 0);
}
