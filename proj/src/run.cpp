#include "ambit/run.hpp"

#include <iomanip>
#include <sstream>

namespace ambit {

namespace {

using nlohmann::json;

json act_values_to_json(const UtilityAct& phi) {
  json a = json::array();
  for (Eigen::Index i = 0; i < phi.size(); ++i) a.push_back(phi[i]);
  return a;
}

std::vector<std::string> selected_models(const Scenario& s, const RunFlags& flags) {
  if (flags.models.empty()) {
    std::vector<std::string> names;
    for (const auto& [name, _] : s.models) names.push_back(name);
    detail::require(!names.empty(), "scenario has no model blocks");
    return names;
  }
  for (const std::string& name : flags.models)
    detail::require(s.models.count(name) > 0, "unknown model '" + name + "'");
  return flags.models;
}

SampleConfig config_for(const Scenario& s, const RunFlags& flags) {
  SampleConfig cfg;
  cfg.states = s.states.size();
  cfg.samples = flags.samples.value_or(10000);
  cfg.seed = flags.seed.value_or(s.seed);
  cfg.tol = flags.tol.value_or(s.tol);
  return cfg;
}

json violations_to_json(const AxiomReport& report, std::size_t cap = 5) {
  json out = json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < cap; ++i) {
    const AxiomViolation& v = report.violations[i];
    out.push_back({{"sample", v.sample_index},
                   {"phi", act_values_to_json(v.phi)},
                   {"partner", act_values_to_json(v.partner)},
                   {"alpha", v.alpha},
                   {"level", v.level},
                   {"value_phi", v.v_phi},
                   {"value_partner", v.v_partner},
                   {"margin", v.margin},
                   {"note", v.note}});
  }
  return out;
}

json axiom_report_to_json(const AxiomReport& report) {
  return {{"axiom", report.axiom},
          {"functional", report.functional},
          {"samples_tested", report.samples_tested},
          {"skipped", report.skipped},
          {"violations_found", report.violations.size()},
          {"verdict", report.passed() ? "no violation found at this budget" : "violated"},
          {"witnesses", violations_to_json(report)},
          {"seed", report.seed}};
}

AxiomReport dispatch_axiom(const std::string& axiom, const Functional& V,
                           const SampleConfig& cfg) {
  if (axiom == "wua") return check_weak_uncertainty_aversion(V, cfg);
  if (axiom == "sd") return check_simple_diversification(V, cfg);
  if (axiom == "ua") return check_uncertainty_aversion(V, cfg);
  if (axiom == "ib") return check_invariant_biseparable(V, cfg);
  if (axiom == "wci") return check_weak_certainty_independence(V, cfg);
  if (axiom == "ri") return check_risk_independence(V, cfg);
  if (axiom == "mono") return check_monotonicity(V, cfg);
  throw InvalidInput("unknown axiom '" + axiom +
                     "' (expected wua, sd, ua, ib, wci, ri or mono)");
}

Report run_eval(const Scenario& s, const RunFlags& flags) {
  Report report;
  json values = json::object();
  for (const std::string& name : selected_models(s, flags)) {
    const std::vector<Functional> fns =
        block_functionals(name, s.models.at(name), flags.tol.value_or(s.tol));
    json per_model = json::object();
    for (const auto& [act_name, _] : s.acts) {
      const UtilityAct phi = scenario_utility_act(s, act_name);
      json per_act = json::object();
      for (const Functional& fn : fns) {
        const std::string key = fn.name.substr(fn.name.find('/') + 1);
        per_act[key] = fn(phi);
      }
      per_model[act_name] = per_act;
    }
    values[name] = per_model;
  }
  report.body["values"] = values;
  return report;
}

Report run_check_axioms(const Scenario& s, const RunFlags& flags) {
  Report report;
  const SampleConfig cfg = config_for(s, flags);
  std::vector<std::string> axioms = flags.axioms;
  if (axioms.empty()) axioms = {"wua"};
  json reports = json::array();
  bool violated = false;
  for (const std::string& name : selected_models(s, flags)) {
    const Functional fn = block_functional(name, s.models.at(name), cfg.tol);
    for (const std::string& axiom : axioms) {
      const AxiomReport r = dispatch_axiom(axiom, fn, cfg);
      violated = violated || !r.passed();
      reports.push_back(axiom_report_to_json(r));
    }
  }
  report.body["axiom_reports"] = reports;
  report.exit_code = violated ? 1 : 0;
  return report;
}

Report run_compare(const Scenario& s, const RunFlags& flags) {
  detail::require(flags.models.size() == 2, "compare needs exactly two --model names");
  const SampleConfig cfg = config_for(s, flags);
  const Functional left = block_functional(flags.models[0], s.models.at(flags.models[0]), cfg.tol);
  const Functional right = block_functional(flags.models[1], s.models.at(flags.models[1]), cfg.tol);
  const EquivReport r = brute_force_equiv(left, right, cfg);
  Report report;
  report.body["equivalence"] = {{"left", r.left},
                                {"right", r.right},
                                {"max_gap", r.max_gap},
                                {"witness", act_values_to_json(r.argmax)},
                                {"lattice_acts", r.lattice_acts},
                                {"sampled_acts", r.sampled_acts},
                                {"acts_over_tol", r.over_tol}};
  report.exit_code = r.passed() ? 0 : 1;
  return report;
}

Report run_rationalize(const Scenario& s, const RunFlags& flags) {
  const SampleConfig cfg = config_for(s, flags);
  Report report;
  json blocks = json::array();
  bool violated = false;
  for (const std::string& name : selected_models(s, flags)) {
    const auto* block = std::get_if<BeliefCollectionBlock>(&s.models.at(name));
    if (block == nullptr) continue;
    const BewleyModel model{block->collection};
    json entry;
    entry["model"] = name;

    json verdicts = json::array();
    for (const auto& [f_name, _] : s.acts)
      for (const auto& [g_name, _g] : s.acts) {
        if (f_name == g_name) continue;
        const PreferenceVerdict v = bewley_prefers(
            model, scenario_utility_act(s, f_name), scenario_utility_act(s, g_name), cfg.tol);
        verdicts.push_back({{"better", f_name},
                            {"worse", g_name},
                            {"weak", v.weak},
                            {"strict", v.strict},
                            {"robust_strict", v.robust_strict}});
      }
    entry["verdicts"] = verdicts;

    json ces = json::object();
    for (const auto& [act_name, _] : s.acts)
      ces[act_name] = rationalized_value(model, scenario_utility_act(s, act_name));
    entry["certainty_equivalents"] = ces;

    const ConsistencyReport cons = check_consistency_axioms(
        model,
        [&](const UtilityAct& phi) { return rationalized_value(model, phi); },
        cfg.samples, cfg.seed, cfg.tol);
    const auto witnesses = [](const std::vector<ConsistencyViolation>& vs) {
      json out = json::array();
      for (std::size_t i = 0; i < vs.size() && i < 5; ++i)
        out.push_back({{"phi", act_values_to_json(vs[i].phi)},
                       {"psi", act_values_to_json(vs[i].psi)},
                       {"x", vs[i].x},
                       {"value", vs[i].value},
                       {"margin", vs[i].margin}});
      return out;
    };
    entry["consistency"] = {{"b1_checked", cons.b1_checked},
                            {"b2_checked", cons.b2_checked},
                            {"b1_violations", cons.b1_violations.size()},
                            {"b2_violations", cons.b2_violations.size()},
                            {"b1_witnesses", witnesses(cons.b1_violations)},
                            {"b2_witnesses", witnesses(cons.b2_violations)}};
    violated = violated || !cons.passed();
    blocks.push_back(entry);
  }
  detail::require(!blocks.empty(), "rationalize needs a belief_collection model");
  report.body["rationalization"] = blocks;
  report.exit_code = violated ? 1 : 0;
  return report;
}

Report run_search(const Scenario& s, const RunFlags& flags) {
  WuaSearchConfig cfg;
  cfg.budget = flags.samples.value_or(cfg.budget);
  cfg.seed = flags.seed.value_or(s.seed);
  const auto found = search_wua_counterexample(cfg);
  Report report;
  if (!found) {
    report.body["search"] = {{"found", false},
                             {"budget", cfg.budget},
                             {"seed", cfg.seed},
                             {"note", "not-found at budget"}};
    report.exit_code = 0;
    return report;
  }
  // archive: a scenario holding the found collection plus the witness
  Scenario archived;
  archived.states.labels = {"s1", "s2"};
  archived.prizes = {"low", "high"};
  archived.utility.values = (Eigen::VectorXd(2) << 0.0, 1.0).finished();
  archived.seed = cfg.seed;
  archived.tol = flags.tol.value_or(s.tol);
  CostCollectionBlock block;
  block.collection = found->collection;
  archived.models["counterexample"] = block;
  archived.witness = ScenarioWitness{found->phi,
                                     found->alpha,
                                     found->hedge_level,
                                     found->value,
                                     found->optimism_branch,
                                     found->pessimism_branch};
  report.body["search"] = {{"found", true},
                           {"candidates_tried", found->candidates_tried},
                           {"seed", cfg.seed},
                           {"witness", scenario_to_json(archived)["witness"]},
                           {"scenario", scenario_to_json(archived)}};
  report.exit_code = 1;  // a violation witness was found
  return report;
}

void render_table(const json& j, std::ostream& os, int depth = 0) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        os << pad << std::left << std::setw(28) << key << " " << value.dump() << "\n";
      } else {
        os << pad << key << ":\n";
        render_table(value, os, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_primitive()) {
        os << pad << "- " << value.dump() << "\n";
      } else {
        os << pad << "-\n";
        render_table(value, os, depth + 1);
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

}  // namespace

std::string Report::to_string(const std::string& format) const {
  if (format == "json") return body.dump(2) + "\n";
  detail::require(format == "table", "unknown format '" + format + "'");
  std::ostringstream os;
  // results first; the machine-facing scenario echo stays in the json form
  static const char* kSections[] = {"values",          "axiom_reports",
                                    "equivalence",     "rationalization",
                                    "search",          "command",
                                    "models",          "axioms",
                                    "samples",         "seed",
                                    "tol",             "version"};
  for (const char* key : kSections)
    if (body.contains(key)) {
      os << key << ":\n";
      render_table(body.at(key), os, 1);
    }
  return os.str();
}

Report run(const std::string& command, const Scenario& scenario, const RunFlags& flags) {
  Report report;
  if (command == "eval") {
    report = run_eval(scenario, flags);
  } else if (command == "check-axioms") {
    report = run_check_axioms(scenario, flags);
  } else if (command == "compare") {
    report = run_compare(scenario, flags);
  } else if (command == "rationalize") {
    report = run_rationalize(scenario, flags);
  } else if (command == "search-counterexample") {
    report = run_search(scenario, flags);
  } else {
    throw InvalidInput("unknown command '" + command + "'");
  }
  report.body["command"] = command;
  report.body["version"] = "1";
  report.body["seed"] = flags.seed.value_or(scenario.seed);
  report.body["tol"] = flags.tol.value_or(scenario.tol);
  if (flags.samples) report.body["samples"] = *flags.samples;
  if (!flags.models.empty()) report.body["models"] = flags.models;
  if (!flags.axioms.empty()) report.body["axioms"] = flags.axioms;
  // embedded scenario makes the report re-runnable as-is
  report.body["scenario_echo"] = scenario_to_json(scenario);
  return report;
}

}  // namespace ambit
