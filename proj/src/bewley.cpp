#include "ambit/bewley.hpp"

namespace ambit {

double support_value(const BeliefCollection& coll, const UtilityAct& phi) {
  return dual_self_value(coll, phi);
}

double dual_support_value(const BeliefCollection& coll, const UtilityAct& phi) {
  return dual_self_value_pessimism_first(coll, phi);
}

PreferenceVerdict bewley_prefers(const BewleyModel& m, const UtilityAct& phi,
                                 const UtilityAct& psi, double tol) {
  detail::require(phi.size() == psi.size(), "utility acts of different dimension");
  const UtilityAct diff = phi - psi;
  const double forward = support_value(m.collection, diff);
  const double backward = support_value(m.collection, -diff);
  PreferenceVerdict v;
  v.weak = forward >= -tol;
  v.strict = v.weak && !(backward >= -tol);
  v.robust_strict = v.strict && robustly_better(m, phi, psi, tol);
  return v;
}

bool robustly_better(const BewleyModel& m, const UtilityAct& phi,
                     const UtilityAct& psi, double tol) {
  const UtilityAct diff = phi - psi;
  return support_value(m.collection, diff) > tol &&
         dual_support_value(m.collection, diff) > tol;
}

double rationalized_value(const BewleyModel& m, const UtilityAct& phi) {
  return cautious_dual_self_value(m.collection, phi);
}

bool halfspace_closure_equal(const BeliefCollection& a, const BeliefCollection& b,
                             const std::vector<UtilityAct>& directions, double tol) {
  detail::require(a.dim() == b.dim(), "collections over different state spaces");
  for (const UtilityAct& dir : directions)
    if (std::abs(support_value(a, dir) - support_value(b, dir)) > tol) return false;
  return true;
}

std::vector<UtilityAct> closure_direction_set(const BeliefCollection& a,
                                              const BeliefCollection& b,
                                              int n_random, std::uint64_t seed) {
  const Eigen::Index n = a.dim();
  std::vector<Belief> extremes;
  for (const BeliefCollection* coll : {&a, &b})
    for (const CredalSet& set : coll->sets)
      for (Eigen::Index i = 0; i < set.size(); ++i) extremes.push_back(set.point(i));

  std::vector<UtilityAct> dirs;
  for (std::size_t i = 0; i < extremes.size(); ++i)
    for (std::size_t j = 0; j < extremes.size(); ++j)
      if (i != j) dirs.push_back(extremes[i] - extremes[j]);
  // Axis directions catch vertex geometry the differences can miss.
  for (Eigen::Index i = 0; i < n; ++i) {
    UtilityAct e = Eigen::VectorXd::Zero(n);
    e[i] = 1.0;
    dirs.push_back(e);
    dirs.push_back(-e);
  }
  Rng rng(seed);
  for (int k = 0; k < n_random; ++k) {
    UtilityAct d(n);
    double norm2 = 0.0;
    do {
      for (Eigen::Index i = 0; i < n; ++i) d[i] = rng.uniform(-1.0, 1.0);
      norm2 = d.squaredNorm();
    } while (norm2 < 1e-6);
    dirs.push_back(d / std::sqrt(norm2));
  }
  return dirs;
}

}  // namespace ambit
