#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ambit/scenario.hpp"

namespace ambit {

struct RunFlags {
  std::vector<std::string> models;   // empty: every block in the scenario
  std::vector<std::string> axioms;   // empty: the default set per command
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::string format = "json";       // "json" or "table"
  std::string out;                   // output path; empty writes to stdout
};

/// Exit semantics: 0 completed with all checks passing, 1 completed with
/// violations found (witnesses in the report), 2 usage/validation error
/// (raised as InvalidInput before a report exists).
struct Report {
  nlohmann::json body;
  int exit_code = 0;

  std::string to_string(const std::string& format) const;
};

/// Dispatches one CLI command against a loaded scenario.
/// command is one of: eval, check-axioms, compare, rationalize,
/// search-counterexample.
Report run(const std::string& command, const Scenario& scenario,
           const RunFlags& flags);

}  // namespace ambit
