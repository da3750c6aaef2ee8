#pragma once

#include <optional>
#include <vector>

#include "ambit/choquet.hpp"
#include "ambit/types.hpp"

namespace ambit {

/// Continuous piecewise-linear function given by breakpoints and values,
/// extended beyond the ends with the first/last segment slopes.
struct PiecewiseLinear {
  std::vector<double> xs;  // strictly increasing, size >= 2
  std::vector<double> ys;

  double operator()(double t) const;
  double slope(std::size_t segment) const;
  std::size_t segments() const { return xs.size() - 1; }
};

PiecewiseLinear identity_pl();

/// Point reflection through the origin: t -> -f(-t). Exact on breakpoints
/// (negations only), so reflecting twice restores the input bit-for-bit.
PiecewiseLinear reflect_pl(const PiecewiseLinear& f);

void validate_pl(const PiecewiseLinear& f);
bool pl_increasing(const PiecewiseLinear& f, double tol = kDefaultTol);
bool pl_convex(const PiecewiseLinear& f, double tol = kDefaultTol);

/// Additive penalty on grid beliefs (+infinity allowed: belief excluded).
struct CostFunction {
  Eigen::VectorXd costs;  // one entry per grid point
};

void validate_cost(const CostFunction& c);

/// The first mover's action set in the variational dual-self game.
/// Normalization: max over c of min over grid of c == 0.
struct CostCollection {
  BeliefGrid grid;
  std::vector<CostFunction> costs;
};

CostCollection validate_cost_collection(const CostCollection& coll,
                                        double tol = kDefaultTol);

/// Shifts every cost by the same constant so the max-min normalization
/// holds exactly; evaluation differences are unaffected up to the shift.
CostCollection normalize_cost_collection(CostCollection coll);

/// max over c of min over grid p of E_p[phi] + c(p).
double variational_dual_self_value(const CostCollection& coll, const UtilityAct& phi);

/// min over c of max over grid p of E_p[phi] - c(p) (the dual game).
double variational_dual_self_value_pessimism_first(const CostCollection& coll,
                                                   const UtilityAct& phi);

/// min of the two game values.
double variational_cautious_value(const CostCollection& coll, const UtilityAct& phi);

/// The canonical complementary act: the midpoint-0 partner -phi, so that
/// (phi + partner)/2 is the zero vector. Partners around any other midpoint
/// k come from hedge_partner(phi, 1/2, k).
UtilityAct complementary_partner(const UtilityAct& phi);

/// One aggregator of the uncertainty-averse family: G(t, p_i) = h(t) + c_i,
/// increasing in t.
struct GFunction {
  PiecewiseLinear h;
  Eigen::VectorXd costs;  // one entry per grid point

  double operator()(double t, Eigen::Index i) const { return h(t) + costs[i]; }
};

void validate_g_function(const GFunction& g, double tol = kDefaultTol);

/// G*(t,p) = -G(-t,p) under the canonical midpoint-0 complementary
/// convention. dual_g(dual_g(g)) == g exactly on breakpoints.
GFunction dual_g(const GFunction& g);

struct GCollection {
  BeliefGrid grid;
  std::vector<GFunction> functions;
};

/// Enforces the normalization max over G of inf over p of G(gamma,p) ==
/// gamma for every real gamma. Within the separable piecewise-linear class
/// this pins every t-section to slope 1 (a convex h with h + min c <= id on
/// all of R must have slope >= 1 at -inf and <= 1 at +inf), so validation
/// checks affine slope-1 sections plus the envelope condition. GFunctions
/// with nonlinear h stay constructible and evaluable; they are simply not
/// members of any valid collection.
GCollection validate_g_collection(const GCollection& coll, double tol = kDefaultTol);

/// max over G of min over grid p of G(E_p[phi], p).
double rational_dual_self_value(const GCollection& coll, const UtilityAct& phi);

/// min{ max_G min_p G(E_p[phi],p), min_G max_p G*(E_p[phi],p) }.
double rational_cautious_value(const GCollection& coll, const UtilityAct& phi);

/// A found counterexample: a valid cost collection whose cautious
/// variational functional passes simple diversification (it must, by the
/// representation theorem) yet fails weak uncertainty aversion at some
/// mixture weight other than 1/2.
struct WuaCounterexample {
  CostCollection collection;
  UtilityAct phi;
  double alpha = 0.0;
  double hedge_level = 0.0;     // the calibrated k; violation means k < value
  double value = 0.0;           // V(phi) = V(partner)
  double optimism_branch = 0.0; // max-min branch at phi
  double pessimism_branch = 0.0;
  int candidates_tried = 0;
};

struct WuaSearchConfig {
  int budget = 100000;
  std::uint64_t seed = 1;
  Eigen::Index grid_points = 11;  // two-state equispaced grid
  int max_costs = 3;
  double violation_margin = 1e-6;
};

/// Random search over small cost collections (kinked-linear costs with
/// lattice coefficients) for a weak-uncertainty-aversion violation at
/// alpha != 1/2. Candidates are screened with a closed-form chord test
/// along the direction (1,-1) -- complete on two states because every act
/// is t*(1,-1) + s*1 and the functional is constant-additive -- and every
/// hit is confirmed through the bisection-calibrated checker before being
/// returned. Not finding anything within budget is a report, not an error.
std::optional<WuaCounterexample> search_wua_counterexample(const WuaSearchConfig& cfg);

}  // namespace ambit
