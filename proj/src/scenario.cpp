#include "ambit/scenario.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ambit {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InvalidInput(path + ": " + what);
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Eigen::VectorXd get_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  Eigen::VectorXd v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = get_number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Eigen::MatrixXd get_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of rows");
  const Eigen::VectorXd first = get_vector(j[0], path + "[0]");
  Eigen::MatrixXd m(j.size(), first.size());
  m.row(0) = first.transpose();
  for (std::size_t i = 1; i < j.size(); ++i) {
    const Eigen::VectorXd row = get_vector(j[i], path + "[" + std::to_string(i) + "]");
    if (row.size() != first.size()) fail(path, "ragged rows");
    m.row(static_cast<Eigen::Index>(i)) = row.transpose();
  }
  return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    rows.push_back(vector_to_json(m.row(i).transpose()));
  return rows;
}

std::string subset_to_string(std::uint32_t mask) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int b = 0; b < 32; ++b)
    if (mask & (1u << b)) {
      if (!first) os << ",";
      os << b;
      first = false;
    }
  os << "}";
  return os.str();
}

BlockFunctional parse_functional(const json& j, const std::string& path) {
  if (!j.contains("functional")) return BlockFunctional::kCautious;
  const std::string f = j.at("functional").get<std::string>();
  if (f == "cautious") return BlockFunctional::kCautious;
  if (f == "optimism-first" || f == "dual-self") return BlockFunctional::kOptimismFirst;
  if (f == "pessimism-first") return BlockFunctional::kPessimismFirst;
  if (f == "plain") return BlockFunctional::kPlain;
  fail(path + ".functional", "unknown functional '" + f + "'");
}

std::string functional_name(BlockFunctional f) {
  switch (f) {
    case BlockFunctional::kCautious: return "cautious";
    case BlockFunctional::kOptimismFirst: return "optimism-first";
    case BlockFunctional::kPessimismFirst: return "pessimism-first";
    default: return "plain";
  }
}

ModelBlock parse_block(const json& j, const std::string& path) {
  if (!j.contains("type")) fail(path, "model block without a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "belief_collection") {
    BeliefCollectionBlock block;
    if (!j.contains("sets")) fail(path, "belief_collection without sets");
    for (std::size_t s = 0; s < j.at("sets").size(); ++s)
      block.collection.sets.push_back(
          CredalSet{get_matrix(j.at("sets")[s], path + ".sets[" + std::to_string(s) + "]")});
    block.functional = parse_functional(j, path);
    return block;
  }
  if (type == "credal_set") {
    CredalSetBlock block;
    block.set.points = get_matrix(j.at("extreme_points"), path + ".extreme_points");
    if (j.contains("alpha")) block.alpha = get_number(j.at("alpha"), path + ".alpha");
    return block;
  }
  if (type == "generalized_alpha") {
    GenAlphaBlock block;
    block.model.reference.points =
        get_matrix(j.at("extreme_points"), path + ".extreme_points");
    if (j.contains("default_weight"))
      block.model.weights.fallback =
          get_number(j.at("default_weight"), path + ".default_weight");
    if (j.contains("weights")) {
      for (std::size_t i = 0; i < j.at("weights").size(); ++i) {
        const json& w = j.at("weights")[i];
        const std::string wpath = path + ".weights[" + std::to_string(i) + "]";
        Signature sig;
        for (const json& r : w.at("ranks")) sig.ranks.push_back(r.get<int>());
        if (static_cast<Eigen::Index>(sig.ranks.size()) != block.model.reference.size())
          fail(wpath, "rank vector does not match the extreme points");
        block.model.weights.set(sig, get_number(w.at("weight"), wpath + ".weight"));
      }
    }
    block.functional = parse_functional(j, path);
    return block;
  }
  if (type == "capacity") {
    CapacityBlock block;
    block.capacity.grid.points = get_matrix(j.at("grid"), path + ".grid");
    const Eigen::Index n = block.capacity.grid.size();
    if (n > kMaxGridPoints) fail(path + ".grid", "belief grid too large");
    const std::size_t n_masks = std::size_t{1} << n;
    std::vector<bool> seen(n_masks, false);
    block.capacity.values.assign(n_masks, 0.0);
    if (!j.contains("values")) fail(path, "capacity without values");
    for (std::size_t i = 0; i < j.at("values").size(); ++i) {
      const json& entry = j.at("values")[i];
      const std::string vpath = path + ".values[" + std::to_string(i) + "]";
      std::uint32_t mask = 0;
      for (const json& idx : entry.at("subset")) {
        const int b = idx.get<int>();
        if (b < 0 || b >= n) fail(vpath + ".subset", "grid index out of range");
        mask |= (1u << b);
      }
      if (seen[mask]) fail(vpath, "duplicate subset " + subset_to_string(mask));
      seen[mask] = true;
      block.capacity.values[mask] = get_number(entry.at("value"), vpath + ".value");
    }
    for (std::size_t m = 0; m < n_masks; ++m)
      if (!seen[m])
        fail(path + ".values", "missing subset " + subset_to_string(
                                   static_cast<std::uint32_t>(m)));
    block.functional = parse_functional(j, path);
    return block;
  }
  if (type == "cost_collection") {
    CostCollectionBlock block;
    block.collection.grid.points = get_matrix(j.at("grid"), path + ".grid");
    if (!j.contains("costs")) fail(path, "cost_collection without costs");
    for (std::size_t i = 0; i < j.at("costs").size(); ++i)
      block.collection.costs.push_back(CostFunction{
          get_vector(j.at("costs")[i], path + ".costs[" + std::to_string(i) + "]")});
    block.functional = parse_functional(j, path);
    return block;
  }
  if (type == "g_collection") {
    GCollectionBlock block;
    block.collection.grid.points = get_matrix(j.at("grid"), path + ".grid");
    if (!j.contains("functions")) fail(path, "g_collection without functions");
    for (std::size_t i = 0; i < j.at("functions").size(); ++i) {
      const json& gj = j.at("functions")[i];
      const std::string gpath = path + ".functions[" + std::to_string(i) + "]";
      GFunction g;
      const Eigen::VectorXd xs = get_vector(gj.at("breakpoints"), gpath + ".breakpoints");
      const Eigen::VectorXd ys = get_vector(gj.at("values"), gpath + ".values");
      if (xs.size() != ys.size()) fail(gpath, "breakpoints/values length mismatch");
      g.h.xs.assign(xs.data(), xs.data() + xs.size());
      g.h.ys.assign(ys.data(), ys.data() + ys.size());
      g.costs = get_vector(gj.at("costs"), gpath + ".costs");
      block.collection.functions.push_back(std::move(g));
    }
    block.functional = parse_functional(j, path);
    return block;
  }
  fail(path, "unknown model type '" + type + "'");
}

json block_to_json(const ModelBlock& block) {
  json j;
  if (const auto* b = std::get_if<BeliefCollectionBlock>(&block)) {
    j["type"] = "belief_collection";
    json sets = json::array();
    for (const CredalSet& s : b->collection.sets) sets.push_back(matrix_to_json(s.points));
    j["sets"] = sets;
    j["functional"] = functional_name(b->functional);
  } else if (const auto* b = std::get_if<CredalSetBlock>(&block)) {
    j["type"] = "credal_set";
    j["extreme_points"] = matrix_to_json(b->set.points);
    if (b->alpha) j["alpha"] = *b->alpha;
  } else if (const auto* b = std::get_if<GenAlphaBlock>(&block)) {
    j["type"] = "generalized_alpha";
    j["extreme_points"] = matrix_to_json(b->model.reference.points);
    j["default_weight"] = b->model.weights.fallback;
    json weights = json::array();
    for (const auto& [sig, w] : b->model.weights.assigned)
      weights.push_back({{"ranks", sig.ranks}, {"weight", w}});
    j["weights"] = weights;
    j["functional"] = functional_name(b->functional);
  } else if (const auto* b = std::get_if<CapacityBlock>(&block)) {
    j["type"] = "capacity";
    j["grid"] = matrix_to_json(b->capacity.grid.points);
    json values = json::array();
    for (std::uint32_t m = 0; m < b->capacity.values.size(); ++m) {
      json subset = json::array();
      for (Eigen::Index bit = 0; bit < b->capacity.grid.size(); ++bit)
        if (m & (1u << bit)) subset.push_back(bit);
      values.push_back({{"subset", subset}, {"value", b->capacity.values[m]}});
    }
    j["values"] = values;
    j["functional"] = functional_name(b->functional);
  } else if (const auto* b = std::get_if<CostCollectionBlock>(&block)) {
    j["type"] = "cost_collection";
    j["grid"] = matrix_to_json(b->collection.grid.points);
    json costs = json::array();
    for (const CostFunction& c : b->collection.costs) costs.push_back(vector_to_json(c.costs));
    j["costs"] = costs;
    j["functional"] = functional_name(b->functional);
  } else if (const auto* b = std::get_if<GCollectionBlock>(&block)) {
    j["type"] = "g_collection";
    j["grid"] = matrix_to_json(b->collection.grid.points);
    json funcs = json::array();
    for (const GFunction& g : b->collection.functions)
      funcs.push_back({{"breakpoints", g.h.xs},
                       {"values", g.h.ys},
                       {"costs", vector_to_json(g.costs)}});
    j["functions"] = funcs;
    j["functional"] = functional_name(b->functional);
  }
  return j;
}

}  // namespace

Scenario scenario_from_json(const json& j) {
  Scenario s;
  if (j.contains("version")) s.version = j.at("version").get<std::string>();
  if (j.contains("tol")) s.tol = get_number(j.at("tol"), "tol");
  if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  if (!j.contains("states")) fail("states", "missing");
  for (const json& name : j.at("states"))
    s.states.labels.push_back(name.get<std::string>());
  if (j.contains("prizes"))
    for (const json& name : j.at("prizes")) s.prizes.push_back(name.get<std::string>());
  if (!j.contains("utility")) fail("utility", "missing");
  s.utility.values = get_vector(j.at("utility"), "utility");
  if (j.contains("acts"))
    for (const auto& [name, a] : j.at("acts").items())
      s.acts[name] = Act{get_matrix(a, "acts." + name)};
  if (j.contains("models"))
    for (const auto& [name, m] : j.at("models").items())
      s.models[name] = parse_block(m, "models." + name);
  if (j.contains("witness")) {
    const json& w = j.at("witness");
    ScenarioWitness wit;
    wit.phi = get_vector(w.at("phi"), "witness.phi");
    wit.alpha = get_number(w.at("alpha"), "witness.alpha");
    wit.hedge_level = get_number(w.at("hedge_level"), "witness.hedge_level");
    wit.value = get_number(w.at("value"), "witness.value");
    wit.optimism_branch = get_number(w.at("optimism_branch"), "witness.optimism_branch");
    wit.pessimism_branch = get_number(w.at("pessimism_branch"), "witness.pessimism_branch");
    s.witness = wit;
  }
  validate_scenario(s);
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
  return scenario_from_json(j);
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["version"] = s.version;
  j["tol"] = s.tol;
  j["seed"] = s.seed;
  j["states"] = s.states.labels;
  j["prizes"] = s.prizes;
  j["utility"] = vector_to_json(s.utility.values);
  json acts = json::object();
  for (const auto& [name, act] : s.acts) acts[name] = matrix_to_json(act.weights);
  j["acts"] = acts;
  json models = json::object();
  for (const auto& [name, block] : s.models) models[name] = block_to_json(block);
  j["models"] = models;
  if (s.witness) {
    j["witness"] = {{"phi", vector_to_json(s.witness->phi)},
                    {"alpha", s.witness->alpha},
                    {"hedge_level", s.witness->hedge_level},
                    {"value", s.witness->value},
                    {"optimism_branch", s.witness->optimism_branch},
                    {"pessimism_branch", s.witness->pessimism_branch}};
  }
  return j;
}

std::string scenario_to_string(const Scenario& s) {
  return scenario_to_json(s).dump(2) + "\n";
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write scenario file: " + path);
  out << scenario_to_string(s);
}

UtilityAct scenario_utility_act(const Scenario& s, const std::string& act_name) {
  auto it = s.acts.find(act_name);
  if (it == s.acts.end()) throw InvalidInput("unknown act '" + act_name + "'");
  return utility_act(it->second, s.utility);
}

namespace {

struct BlockValidator {
  double tol;
  void operator()(BeliefCollectionBlock& b) const {
    b.collection = validate_collection(b.collection, tol);
  }
  void operator()(CredalSetBlock& b) const {
    b.set = validate_credal_set(b.set, tol);
    if (b.alpha)
      detail::require(*b.alpha >= 0.0 && *b.alpha <= 1.0, "alpha outside [0,1]");
  }
  void operator()(GenAlphaBlock& b) const {
    b.model.reference = validate_credal_set(b.model.reference, tol);
    detail::require(b.model.weights.fallback >= 0.0 && b.model.weights.fallback <= 1.0,
                    "default weight outside [0,1]");
  }
  void operator()(CapacityBlock& b) const { b.capacity = validate_capacity(b.capacity); }
  void operator()(CostCollectionBlock& b) const {
    b.collection = validate_cost_collection(b.collection, tol);
  }
  void operator()(GCollectionBlock& b) const {
    b.collection = validate_g_collection(b.collection, tol);
  }
};

Eigen::Index block_states(const ModelBlock& block) {
  return std::visit(
      [](const auto& b) -> Eigen::Index {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BeliefCollectionBlock>) return b.collection.dim();
        if constexpr (std::is_same_v<T, CredalSetBlock>) return b.set.dim();
        if constexpr (std::is_same_v<T, GenAlphaBlock>) return b.model.reference.dim();
        if constexpr (std::is_same_v<T, CapacityBlock>) return b.capacity.grid.states();
        if constexpr (std::is_same_v<T, CostCollectionBlock>) return b.collection.grid.states();
        if constexpr (std::is_same_v<T, GCollectionBlock>) return b.collection.grid.states();
      },
      block);
}

}  // namespace

void validate_scenario(Scenario& s) {
  validate_state_space(s.states);
  validate_utility(s.utility);
  const Eigen::Index n_states = s.states.size();
  const Eigen::Index n_prizes = s.utility.values.size();
  if (!s.prizes.empty())
    detail::require(static_cast<Eigen::Index>(s.prizes.size()) == n_prizes,
                    "prize names do not match the utility vector");
  for (const auto& [name, act] : s.acts) {
    try {
      detail::require(act.states() == n_states, "act rows must match the states");
      detail::require(act.prizes() == n_prizes, "act columns must match the prizes");
      validate_act(act);
    } catch (const InvalidInput& e) {
      throw InvalidInput("acts." + name + ": " + e.what());
    }
  }
  for (auto& [name, block] : s.models) {
    try {
      detail::require(block_states(block) == n_states,
                      "model dimension must match the states");
      std::visit(BlockValidator{s.tol}, block);
    } catch (const InvalidInput& e) {
      throw InvalidInput("models." + name + ": " + e.what());
    }
  }
}

Functional block_functional(const std::string& name, const ModelBlock& block,
                            double tol) {
  std::vector<Functional> all = block_functionals(name, block, tol);
  return all.front();
}

std::vector<Functional> block_functionals(const std::string& name,
                                          const ModelBlock& block, double tol) {
  std::vector<Functional> out;
  if (const auto* b = std::get_if<BeliefCollectionBlock>(&block)) {
    const BeliefCollection coll = b->collection;
    Functional cautious = make_functional(
        name + "/cautious-dual-self",
        [coll](const UtilityAct& phi) { return cautious_dual_self_value(coll, phi); });
    Functional optimism = make_functional(
        name + "/dual-self",
        [coll](const UtilityAct& phi) { return dual_self_value(coll, phi); });
    Functional pessimism = make_functional(
        name + "/pessimism-first", [coll](const UtilityAct& phi) {
          return dual_self_value_pessimism_first(coll, phi);
        });
    switch (b->functional) {
      case BlockFunctional::kOptimismFirst:
      case BlockFunctional::kPlain:
        out = {optimism, cautious, pessimism};
        break;
      case BlockFunctional::kPessimismFirst:
        out = {pessimism, optimism, cautious};
        break;
      default:
        out = {cautious, optimism, pessimism};
    }
  } else if (const auto* b = std::get_if<CredalSetBlock>(&block)) {
    const CredalSet set = b->set;
    out.push_back(make_functional(name + "/maxmin", [set](const UtilityAct& phi) {
      return maxmin_value(set, phi);
    }));
    if (b->alpha) {
      const double alpha = *b->alpha;
      out.insert(out.begin(),
                 make_functional(name + "/alpha-maxmin", [set, alpha](const UtilityAct& phi) {
                   return alpha_maxmin_value(set, alpha, phi);
                 }));
    }
  } else if (const auto* b = std::get_if<GenAlphaBlock>(&block)) {
    const GenAlphaModel model = b->model;
    Functional cautious = make_functional(
        name + "/cautious-generalized-alpha", [model, tol](const UtilityAct& phi) {
          return cautious_generalized_alpha_value(model, phi, tol);
        });
    Functional plain = make_functional(
        name + "/generalized-alpha", [model, tol](const UtilityAct& phi) {
          return generalized_alpha_value(model, phi, tol);
        });
    out = b->functional == BlockFunctional::kPlain
              ? std::vector<Functional>{plain, cautious}
              : std::vector<Functional>{cautious, plain};
  } else if (const auto* b = std::get_if<CapacityBlock>(&block)) {
    const GridCapacity v = b->capacity;
    Functional cautious =
        make_functional(name + "/cautious-choquet", [v](const UtilityAct& phi) {
          return cautious_choquet_value(v, phi);
        });
    Functional plain = make_functional(name + "/choquet", [v](const UtilityAct& phi) {
      return choquet_integral(v, induced_kappa(v.grid, phi));
    });
    const GridCapacity dual = dual_capacity(v);
    Functional dual_fn =
        make_functional(name + "/dual-choquet", [dual](const UtilityAct& phi) {
          return choquet_integral(dual, induced_kappa(dual.grid, phi));
        });
    out = b->functional == BlockFunctional::kPlain
              ? std::vector<Functional>{plain, dual_fn, cautious}
              : std::vector<Functional>{cautious, plain, dual_fn};
  } else if (const auto* b = std::get_if<CostCollectionBlock>(&block)) {
    const CostCollection coll = b->collection;
    Functional cautious = make_functional(
        name + "/cautious-variational",
        [coll](const UtilityAct& phi) { return variational_cautious_value(coll, phi); });
    Functional plain = make_functional(
        name + "/variational-dual-self",
        [coll](const UtilityAct& phi) { return variational_dual_self_value(coll, phi); });
    out = b->functional == BlockFunctional::kPlain
              ? std::vector<Functional>{plain, cautious}
              : std::vector<Functional>{cautious, plain};
  } else if (const auto* b = std::get_if<GCollectionBlock>(&block)) {
    const GCollection coll = b->collection;
    Functional cautious = make_functional(
        name + "/cautious-rational",
        [coll](const UtilityAct& phi) { return rational_cautious_value(coll, phi); });
    Functional plain = make_functional(
        name + "/rational-dual-self",
        [coll](const UtilityAct& phi) { return rational_dual_self_value(coll, phi); });
    out = b->functional == BlockFunctional::kPlain
              ? std::vector<Functional>{plain, cautious}
              : std::vector<Functional>{cautious, plain};
  }
  return out;
}

}  // namespace ambit
