#include "ambit/beliefs.hpp"

namespace ambit {

CredalSet singleton_set(const Belief& p) {
  CredalSet s;
  s.points = p.transpose();
  return s;
}

CredalSet full_simplex(Eigen::Index n) {
  detail::require(n >= 2, "simplex needs at least two states");
  CredalSet s;
  s.points = Eigen::MatrixXd::Identity(n, n);
  return s;
}

BeliefCollection collection_of(std::initializer_list<CredalSet> sets) {
  BeliefCollection c;
  c.sets.assign(sets.begin(), sets.end());
  return c;
}

double min_expectation(const CredalSet& P, const UtilityAct& phi) {
  detail::require(P.size() > 0, "empty credal set");
  detail::require(P.dim() == phi.size(), "belief/act dimension mismatch");
  return (P.points * phi).minCoeff();
}

double max_expectation(const CredalSet& P, const UtilityAct& phi) {
  detail::require(P.size() > 0, "empty credal set");
  detail::require(P.dim() == phi.size(), "belief/act dimension mismatch");
  return (P.points * phi).maxCoeff();
}

Belief validate_belief(const Belief& p, double tol) {
  detail::require(p.size() >= 2, "belief needs at least two states");
  // Entries may dip below zero by floating-point noise only.
  detail::require((p.array() >= -1e-12).all(), "belief has negative mass");
  Belief q = p.cwiseMax(0.0);
  const double mass = q.sum();
  detail::require(std::abs(mass - 1.0) <= tol, "belief mass is not one");
  if (mass != 1.0) q /= mass;
  return q;
}

CredalSet validate_credal_set(const CredalSet& P, double tol) {
  detail::require(P.size() > 0, "empty credal set");
  CredalSet out;
  out.points.resize(P.size(), P.dim());
  for (Eigen::Index i = 0; i < P.size(); ++i)
    out.points.row(i) = validate_belief(P.point(i), tol).transpose();
  return out;
}

bool has_duplicate_points(const CredalSet& P, double tol) {
  for (Eigen::Index i = 0; i < P.size(); ++i)
    for (Eigen::Index j = i + 1; j < P.size(); ++j)
      if ((P.points.row(i) - P.points.row(j)).cwiseAbs().maxCoeff() <= tol)
        return true;
  return false;
}

BeliefCollection validate_collection(const BeliefCollection& coll, double tol) {
  detail::require(!coll.sets.empty(), "empty belief collection");
  BeliefCollection out;
  out.sets.reserve(coll.sets.size());
  const Eigen::Index dim = coll.sets.front().dim();
  for (const CredalSet& P : coll.sets) {
    detail::require(P.dim() == dim, "credal sets over different state spaces");
    out.sets.push_back(validate_credal_set(P, tol));
  }
  return out;
}

}  // namespace ambit
