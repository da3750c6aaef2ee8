#pragma once

#include <vector>

#include "ambit/types.hpp"

namespace ambit {

/// A credal set: the convex hull of finitely many extreme-point beliefs.
/// Row i of `points` is the i-th extreme point; columns index states.
/// Every objective in this library is linear in the belief, so a min or max
/// over the set is attained at (and computed over) the extreme points.
struct CredalSet {
  Eigen::MatrixXd points;

  Eigen::Index size() const { return points.rows(); }       // extreme points
  Eigen::Index dim() const { return points.cols(); }        // states
  Belief point(Eigen::Index i) const { return points.row(i).transpose(); }
};

CredalSet singleton_set(const Belief& p);

/// The full probability simplex on n states (unit-vector extreme points).
CredalSet full_simplex(Eigen::Index n);

/// A belief collection: the first mover's action set.
struct BeliefCollection {
  std::vector<CredalSet> sets;

  Eigen::Index size() const { return static_cast<Eigen::Index>(sets.size()); }
  Eigen::Index dim() const { return sets.empty() ? 0 : sets.front().dim(); }
};

BeliefCollection collection_of(std::initializer_list<CredalSet> sets);

/// min over p in P of E_p[phi].
double min_expectation(const CredalSet& P, const UtilityAct& phi);

/// max over p in P of E_p[phi].
double max_expectation(const CredalSet& P, const UtilityAct& phi);

/// Clamps tiny negative masses to zero and renormalizes each belief whose
/// mass is within tolerance of one. Throws on real violations.
Belief validate_belief(const Belief& p, double tol = kDefaultTol);

CredalSet validate_credal_set(const CredalSet& P, double tol = kDefaultTol);

/// True if the set lists the same extreme point more than once (allowed,
/// but worth surfacing: duplicates are usually a modelling slip).
bool has_duplicate_points(const CredalSet& P, double tol = kDefaultTol);

/// Validates and cleans every member set.
BeliefCollection validate_collection(const BeliefCollection& coll,
                                     double tol = kDefaultTol);

}  // namespace ambit
