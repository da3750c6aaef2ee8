#pragma once

#include <optional>
#include <vector>

#include "ambit/beliefs.hpp"
#include "ambit/representations.hpp"
#include "ambit/types.hpp"

namespace ambit {

/// The first criterion: an objective, possibly incomplete and intransitive
/// relation. phi is weakly preferred to psi when some credal set in the
/// collection unanimously agrees.
struct BewleyModel {
  BeliefCollection collection;
};

/// weak:   some set unanimously ranks phi over psi (within tol).
/// strict: weak holds and the reverse weak fails.
/// robust_strict: the strict ranking survives small mixture perturbations
///   of both alternatives.
struct PreferenceVerdict {
  bool weak = false;
  bool strict = false;
  bool robust_strict = false;
};

/// max over sets of the within-set minimum of E_p[phi]: the generalized
/// support functional. Equal support values over all directions pin down
/// the half-space closure of the collection.
double support_value(const BeliefCollection& coll, const UtilityAct& phi);

/// min over sets of the within-set maximum (the dual support).
double dual_support_value(const BeliefCollection& coll, const UtilityAct& phi);

PreferenceVerdict bewley_prefers(const BewleyModel& m, const UtilityAct& phi,
                                 const UtilityAct& psi, double tol = kDefaultTol);

/// Closed-form margin criterion for the robust strict relation: both the
/// support and the dual support of the difference must clear tol. The
/// perturbation definition is the specification of record; for generalized
/// Bewley models the margin form is equivalent (strict pointwise
/// inequalities propagate to epsilon-mixtures of bounded acts).
bool robustly_better(const BewleyModel& m, const UtilityAct& phi,
                     const UtilityAct& psi, double tol = kDefaultTol);

/// The second criterion's certainty-equivalent utility of phi: the cautious
/// dual-self value under the same collection.
double rationalized_value(const BewleyModel& m, const UtilityAct& phi);

/// True iff the two collections have equal support values (within tol) for
/// every direction in the test set. A refutation is sound; agreement on a
/// dense direction set is the working notion of equal half-space closure.
bool halfspace_closure_equal(const BeliefCollection& a, const BeliefCollection& b,
                             const std::vector<UtilityAct>& directions,
                             double tol = kDefaultTol);

/// Default direction set: all pairwise differences of extreme points across
/// both collections plus n_random uniformly sampled unit directions.
std::vector<UtilityAct> closure_direction_set(const BeliefCollection& a,
                                              const BeliefCollection& b,
                                              int n_random = 2048,
                                              std::uint64_t seed = 0);

struct ConsistencyViolation {
  UtilityAct phi;
  UtilityAct psi;       // empty for B2
  double x = 0.0;       // the pivot constant
  double value = 0.0;   // V at the offending act
  double margin = 0.0;
};

struct ConsistencyReport {
  int b1_checked = 0;
  int b2_checked = 0;
  std::vector<ConsistencyViolation> b1_violations;
  std::vector<ConsistencyViolation> b2_violations;

  bool passed() const { return b1_violations.empty() && b2_violations.empty(); }
};

/// Samples act/constant configurations and checks the two rationalization
/// axioms against an arbitrary second-criterion functional V:
///   B1: phi robustly-better than x*1 and x*1 robustly-better than psi
///       imply V(phi) > V(psi);
///   B2: if phi is not strictly preferred to x*1, then x >= V(phi) - tol.
/// Constants are drawn from the closed interval spanned by the act's own
/// utility range.
template <typename Fn>
ConsistencyReport check_consistency_axioms(const BewleyModel& m, Fn&& V,
                                           int samples, std::uint64_t seed,
                                           double tol = kDefaultTol);

// --- implementation ---

template <typename Fn>
ConsistencyReport check_consistency_axioms(const BewleyModel& m, Fn&& V,
                                           int samples, std::uint64_t seed,
                                           double tol) {
  const Eigen::Index n = m.collection.dim();
  Rng rng(seed);
  ConsistencyReport report;
  const double margin = 10.0 * tol;
  for (int it = 0; it < samples; ++it) {
    UtilityAct phi(n), psi(n);
    for (Eigen::Index i = 0; i < n; ++i) phi[i] = rng.uniform(-4.0, 4.0);
    for (Eigen::Index i = 0; i < n; ++i) psi[i] = rng.uniform(-4.0, 4.0);
    const double lo = std::min(phi.minCoeff(), psi.minCoeff());
    const double hi = std::max(phi.maxCoeff(), psi.maxCoeff());
    const double x = rng.uniform(lo, hi);
    const UtilityAct xc = Eigen::VectorXd::Constant(n, x);

    if (robustly_better(m, phi, xc, tol) && robustly_better(m, xc, psi, tol)) {
      ++report.b1_checked;
      const double v_phi = V(phi);
      const double v_psi = V(psi);
      if (!(v_phi > v_psi)) {
        report.b1_violations.push_back({phi, psi, x, v_phi, v_psi - v_phi});
      }
    }

    const PreferenceVerdict verdict = bewley_prefers(m, phi, xc, tol);
    if (!verdict.strict) {
      ++report.b2_checked;
      const double v_phi = V(phi);
      if (x < v_phi - margin) {
        report.b2_violations.push_back({phi, {}, x, v_phi, v_phi - x});
      }
    }
  }
  return report;
}

}  // namespace ambit
