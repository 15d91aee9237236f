#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "fole/io/commands.hpp"

using namespace fole;
using namespace fole::io;

namespace {

int emit(const CommandResult& r, const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "csv") {
    if (!r.table) fail(Errc::ParseError, "--format csv applies only to join and sum");
    text = table_csv(*r.table);
  } else {
    text = r.report.dump(2) + "\n";
  }
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(Errc::ParseError, "cannot write '" + out_path + "'");
    out << text;
  }
  if (!r.ok())
    for (const auto& c : r.report.at("checks"))
      for (const auto& f : c.at("failures")) std::cerr << c.at("check").get<std::string>() << ": " << f.get<std::string>() << "\n";
  return static_cast<int>(r.ok() ? ExitCode::Pass : ExitCode::CheckFailed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical relational databases: joins, sums, projections, Kan extensions, Grothendieck constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string workspace, out_path, format = "json";
  app.add_option("--workspace", workspace, "workspace JSON document")->required();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string target, which, direction, along, convention = "fibration";
  auto* join = app.add_subcommand("join", "join (limit) of a database");
  join->add_option("database", target)->required();
  auto* sum = app.add_subcommand("sum", "sum (colimit) of a database");
  sum->add_option("database", target)->required();
  auto* project = app.add_subcommand("project", "schema, key or data projection of a database");
  project->add_option("database", target)->required();
  project->add_option("--which", which)->required()->check(CLI::IsMember({"schema", "key", "data"}));
  auto* limit = app.add_subcommand("limit", "limit of a set-valued diagram");
  limit->add_option("diagram", target)->required();
  auto* colimit = app.add_subcommand("colimit", "colimit of a set-valued diagram");
  colimit->add_option("diagram", target)->required();
  auto* kan = app.add_subcommand("kan", "left or right Kan extension of a diagram along a passage");
  kan->add_option("diagram", target)->required();
  kan->add_option("--direction", direction)->required()->check(CLI::IsMember({"left", "right"}));
  kan->add_option("--along", along)->required();
  auto* check = app.add_subcommand("check", "verify a database morphism");
  check->add_option("morphism", target)->required();
  auto* groth = app.add_subcommand("groth", "Grothendieck construction of an indexed adjunction");
  groth->add_option("indexed", target)->required();
  groth->add_option("--convention", convention)->check(CLI::IsMember({"fibration", "opfibration"}));
  auto* validate = app.add_subcommand("validate", "load and verify one named entity");
  validate->add_option("name", target)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::InputError);
  }

  try {
    auto ws = parse_workspace(workspace);
    CommandResult r;
    if (*join) r = cmd_join(ws, target);
    else if (*sum) r = cmd_sum(ws, target);
    else if (*project) r = cmd_project(ws, target, which);
    else if (*limit) r = cmd_universal(ws, target, ConeKind::Limit);
    else if (*colimit) r = cmd_universal(ws, target, ConeKind::Colimit);
    else if (*kan) r = cmd_kan(ws, direction, along, target);
    else if (*check) r = cmd_check(ws, target);
    else if (*groth) r = cmd_groth(ws, target, convention);
    else r = cmd_validate(ws, target);
    return emit(r, format, out_path);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(ExitCode::InputError);
  }
}
