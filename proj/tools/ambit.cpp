#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ambit/run.hpp"

namespace {

void emit(const ambit::Report& report, const ambit::RunFlags& flags) {
  const std::string text = report.to_string(flags.format);
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  // written atomically: whole string to a temp file, then rename
  const std::string tmp = flags.out + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ambit::InvalidInput("cannot write output file: " + flags.out);
    out << text;
  }
  std::rename(tmp.c_str(), flags.out.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate acts and verify axioms under ambiguity representations"};
  app.require_subcommand(1);

  std::string scenario_path;
  ambit::RunFlags flags;
  std::string command;

  for (const auto& name :
       {"eval", "check-axioms", "compare", "rationalize", "search-counterexample"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--scenario", scenario_path, "scenario file (JSON)")->required();
    sub->add_option("--model", flags.models, "model block name (repeatable)");
    sub->add_option("--axiom", flags.axioms,
                    "axiom to check: wua, sd, ua, ib, wci, ri, mono (repeatable)")
        ->delimiter(',');
    sub->add_option("--samples", flags.samples, "sample or candidate budget");
    sub->add_option("--seed", flags.seed, "random seed (default: scenario seed)");
    sub->add_option("--tol", flags.tol, "tolerance (default: scenario tol)");
    sub->add_option("--out", flags.out, "write the report here instead of stdout");
    sub->add_option("--format", flags.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->callback([&command, name] { command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    const ambit::Scenario scenario = ambit::load_scenario(scenario_path);
    const ambit::Report report = ambit::run(command, scenario, flags);
    emit(report, flags);
    return report.exit_code;
  } catch (const ambit::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
