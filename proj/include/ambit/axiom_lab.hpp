#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ambit/beliefs.hpp"
#include "ambit/choquet.hpp"
#include "ambit/general_models.hpp"
#include "ambit/representations.hpp"
#include "ambit/types.hpp"

namespace ambit {

/// An evaluator of utility acts under test, with a display name.
struct Functional {
  std::string name;
  std::function<double(const UtilityAct&)> eval;

  double operator()(const UtilityAct& phi) const { return eval(phi); }
};

struct SampleConfig {
  Eigen::Index states = 2;
  int samples = 10000;
  double lo = -4.0;  // utility range for sampled acts
  double hi = 4.0;
  double lattice_radius = 3.0;
  double lattice_step = 1.0;
  std::uint64_t seed = 42;
  double tol = kDefaultTol;
};

void validate_sample_config(const SampleConfig& cfg);

struct AxiomViolation {
  int sample_index = 0;
  UtilityAct phi;
  UtilityAct partner;
  double alpha = 0.0;
  double level = 0.0;   // calibrated constant, where applicable
  double v_phi = 0.0;
  double v_partner = 0.0;
  double margin = 0.0;
  std::string note;
};

/// Result of one axiom run. A pass means "no violation found at this
/// budget", not that the axiom is proved.
struct AxiomReport {
  std::string axiom;
  std::string functional;
  int samples_tested = 0;
  int skipped = 0;
  std::vector<AxiomViolation> violations;
  std::uint64_t seed = 0;

  bool passed() const { return violations.empty(); }
};

/// Solves for the hedge level k with V(hedge_partner(phi, alpha, k)) =
/// V(phi) by bisection over k in [min phi - pad, max phi + pad]. Returns
/// nothing when the endpoints fail to bracket the target (V not monotone on
/// the segment) or the calibrated value misses the target by more than the
/// calibration tolerance; such samples are skipped and counted.
std::optional<double> indifference_constant(const Functional& V,
                                            const UtilityAct& phi, double alpha,
                                            double tol = kDefaultTol);

/// The constant x with V(x*1) = V(phi), found by bisection on constants.
std::optional<double> certainty_equivalent(const Functional& V, const UtilityAct& phi,
                                           double tol = kDefaultTol);

/// For sampled (phi, alpha): calibrate the perfect hedge to indifference and
/// flag samples where the constant mixture falls below V(phi).
AxiomReport check_weak_uncertainty_aversion(const Functional& V, const SampleConfig& cfg);

/// Weak uncertainty aversion restricted to half-half complementary pairs.
AxiomReport check_simple_diversification(const Functional& V, const SampleConfig& cfg);

/// Full uncertainty aversion: partners calibrated to indifference along a
/// random direction, mixtures need not be constant acts.
AxiomReport check_uncertainty_aversion(const Functional& V, const SampleConfig& cfg);

/// Positive homogeneity (factors 1/4, 1/2, 2, 4), constant additivity, and
/// monotonicity on dominated pairs.
AxiomReport check_invariant_biseparable(const Functional& V, const SampleConfig& cfg);

/// Invariance of the comparison sign under swapping the constant mixed in.
AxiomReport check_weak_certainty_independence(const Functional& V,
                                              const SampleConfig& cfg);

/// Faithfulness on constants (V(k*1) = k) and order preservation under
/// mixing constants with constants.
AxiomReport check_risk_independence(const Functional& V, const SampleConfig& cfg);

/// V(phi) >= V(psi) for sampled dominated pairs phi >= psi.
AxiomReport check_monotonicity(const Functional& V, const SampleConfig& cfg);

struct EquivReport {
  std::string left;
  std::string right;
  double max_gap = 0.0;
  UtilityAct argmax;
  int lattice_acts = 0;
  int sampled_acts = 0;
  int over_tol = 0;

  bool passed() const { return over_tol == 0; }
};

/// Sweeps the integer lattice {-radius..radius}^S at the configured step
/// plus cfg.samples random acts; reports the largest |V1 - V2|.
EquivReport brute_force_equiv(const Functional& V1, const Functional& V2,
                              const SampleConfig& cfg);

/// Calls fn with every lattice act of the given dimension.
void for_each_lattice_act(Eigen::Index states, double radius, double step,
                          const std::function<void(const UtilityAct&)>& fn);

// --- random instances (structurally valid by construction) ---

Belief random_belief(Rng& rng, Eigen::Index states);

UtilityAct random_act(Rng& rng, Eigen::Index states, double lo, double hi);

CredalSet random_credal_set(Rng& rng, Eigen::Index states, Eigen::Index max_points);

/// 1-4 credal sets of up to 4 extreme points each.
BeliefCollection random_collection(const SampleConfig& cfg);
BeliefCollection random_collection(Rng& rng, Eigen::Index states);

/// A collection whose members all contain one shared belief, so the
/// pessimism-first value dominates the optimism-first value everywhere.
BeliefCollection random_overlapping_collection(Rng& rng, Eigen::Index states);

/// Monotone by cumulative max over the subset lattice, then quantized.
GridCapacity random_capacity(const SampleConfig& cfg, const BeliefGrid& grid);
GridCapacity random_capacity(Rng& rng, const BeliefGrid& grid);

/// A random grid of distinct beliefs (simplex corners plus interior draws).
BeliefGrid random_grid(Rng& rng, Eigen::Index states, Eigen::Index points);

/// Shifted to satisfy the max-min-zero normalization exactly.
CostCollection random_cost_collection(const SampleConfig& cfg);
CostCollection random_cost_collection(Rng& rng, Eigen::Index states);

/// Valid (globally normalized) G collection: slope-1 sections with random
/// intercepts and grid offsets, anchor touching the identity envelope.
GCollection random_g_collection(Rng& rng, Eigen::Index states);

/// Generalized alpha-maxmin model over a random non-singleton credal set.
/// When compliant, assigned weights satisfy a(s) + a(dual s) >= 1 on every
/// signature realized by the planting acts (the fallback 0.5 covers unseen
/// classes); otherwise one realized non-crisp pair sums below 1 - deficit.
GenAlphaModel random_gen_alpha_model(Rng& rng, Eigen::Index states, bool compliant,
                                     double deficit = 0.1);

/// A nonzero utility act that is crisp for P (equal expectation across the
/// extreme points), sampled from constants plus the null space of the
/// extreme-point differences.
UtilityAct random_crisp_act(Rng& rng, const CredalSet& P, double lo, double hi);

// --- canonical functionals for reports and the CLI ---

Functional make_functional(std::string name, std::function<double(const UtilityAct&)> f);

}  // namespace ambit
