#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ambit/axiom_lab.hpp"
#include "ambit/bewley.hpp"
#include "ambit/choquet.hpp"
#include "ambit/core.hpp"
#include "ambit/general_models.hpp"
#include "ambit/representations.hpp"

namespace ambit {

/// Evaluation variant selected inside a model block.
enum class BlockFunctional { kCautious, kOptimismFirst, kPessimismFirst, kPlain };

struct BeliefCollectionBlock {
  BeliefCollection collection;
  BlockFunctional functional = BlockFunctional::kCautious;
};

struct CredalSetBlock {
  CredalSet set;
  std::optional<double> alpha;  // present: alpha-maxmin weight on the minimum
};

struct GenAlphaBlock {
  GenAlphaModel model;
  BlockFunctional functional = BlockFunctional::kCautious;
};

struct CapacityBlock {
  GridCapacity capacity;
  BlockFunctional functional = BlockFunctional::kCautious;
};

struct CostCollectionBlock {
  CostCollection collection;
  BlockFunctional functional = BlockFunctional::kCautious;
};

struct GCollectionBlock {
  GCollection collection;
  BlockFunctional functional = BlockFunctional::kCautious;
};

using ModelBlock = std::variant<BeliefCollectionBlock, CredalSetBlock, GenAlphaBlock,
                                CapacityBlock, CostCollectionBlock, GCollectionBlock>;

/// A found weak-uncertainty-aversion violation archived with its scenario.
struct ScenarioWitness {
  UtilityAct phi;
  double alpha = 0.0;
  double hedge_level = 0.0;
  double value = 0.0;
  double optimism_branch = 0.0;
  double pessimism_branch = 0.0;
};

/// A serializable bundle of states, prizes, utility, acts and model blocks.
struct Scenario {
  std::string version = "1";
  double tol = kDefaultTol;
  std::uint64_t seed = 42;
  StateSpace states;
  std::vector<std::string> prizes;
  UtilityFunction utility;
  std::map<std::string, Act> acts;
  std::map<std::string, ModelBlock> models;
  std::optional<ScenarioWitness> witness;
};

/// Parses and fully validates a scenario file. Errors carry a
/// path-addressed message (e.g. "models.cap.values: missing subset {0,2}").
Scenario load_scenario(const std::string& path);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

/// Canonical serialization: sorted keys, two-space indent, shortest
/// round-trip numbers, trailing newline. save(load(s)) is byte-identical
/// for files already in this form.
std::string scenario_to_string(const Scenario& s);
void save_scenario(const Scenario& s, const std::string& path);

/// The utility act of a named act in the scenario.
UtilityAct scenario_utility_act(const Scenario& s, const std::string& act_name);

/// The evaluator a model block denotes (per its functional selector).
Functional block_functional(const std::string& name, const ModelBlock& block,
                            double tol);

/// Every evaluator a block supports, for value tables.
std::vector<Functional> block_functionals(const std::string& name,
                                          const ModelBlock& block, double tol);

/// Dimension consistency and per-module validation of every block.
/// Canonicalizes the blocks in place (belief cleanup, capacity quantization).
void validate_scenario(Scenario& s);

}  // namespace ambit
