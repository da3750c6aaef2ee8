#pragma once

#include <map>
#include <string>
#include <vector>

#include "ambit/beliefs.hpp"
#include "ambit/types.hpp"

namespace ambit {

/// The weak order an act induces on the extreme points of a reference
/// credal set by p -> E_p[phi]. ranks[i] is the dense rank of extreme point
/// i, 0 being the highest expected utility; equal ranks are ties.
/// Acts with the same signature order scenarios identically and share the
/// act-dependent weight in the generalized alpha-maxmin model.
struct Signature {
  std::vector<int> ranks;

  bool operator==(const Signature& o) const { return ranks == o.ranks; }
  bool operator<(const Signature& o) const { return ranks < o.ranks; }

  /// True when every extreme point is tied (the act is crisp for the set).
  bool total_tie() const;

  std::string to_string() const;  // e.g. "p1 > p2 ~ p3"
};

/// Signature of phi on ext P, with ties resolved at tol (values whose
/// adjacent descending gap is <= tol are chained into one tie block).
Signature signature(const CredalSet& P, const UtilityAct& phi,
                    double tol = kDefaultTol);

/// The order-reversed signature: the class of hedge partners of phi
/// (a partner's utilities run in the opposite direction, so the scenario
/// ranking flips while ties are preserved).
Signature dual_signature(const Signature& sig);

/// Act-dependent weight on the worst scenario, keyed by signature.
/// Signatures never assigned explicitly fall back to `fallback`, so every
/// model is total without enumerating all weak orders.
struct WeightFunction {
  std::map<Signature, double> assigned;
  double fallback = 0.5;

  double weight(const Signature& sig) const;
  void set(const Signature& sig, double w);
};

/// Generalized alpha-maxmin model (u, P, a) with u already absorbed into
/// utility-act space.
struct GenAlphaModel {
  CredalSet reference;  // P
  WeightFunction weights;  // a
};

enum class SelectedGame { kOptimismFirst, kPessimismFirst, kTie };

std::string to_string(SelectedGame g);

/// min over P of expected utility (worst prior in a single credal set).
double maxmin_value(const CredalSet& P, const UtilityAct& phi);

/// Optimism moves first: max over sets of the within-set minimum.
double dual_self_value(const BeliefCollection& coll, const UtilityAct& phi);

/// Pessimism moves first: min over sets of the within-set maximum.
double dual_self_value_pessimism_first(const BeliefCollection& coll,
                                       const UtilityAct& phi);

/// The cautious evaluation: the lower of the two game values.
double cautious_dual_self_value(const BeliefCollection& coll,
                                const UtilityAct& phi);

/// Which of the two games delivers the cautious value for phi.
SelectedGame selected_game(const BeliefCollection& coll, const UtilityAct& phi,
                           double tol = kDefaultTol);

/// alpha * min + (1 - alpha) * max over a single credal set.
double alpha_maxmin_value(const CredalSet& P, double alpha, const UtilityAct& phi);

enum class AlphaSide { kShrinkToMin, kShrinkToMax };

/// The belief collection {alpha*P + (1-alpha){p} : p in ext P} (shrink-to-min)
/// or its mirror {alpha{p} + (1-alpha)*P : p in ext P}. For alpha >= 1/2 the
/// cautious dual-self value over this collection reproduces alpha-maxmin.
BeliefCollection alpha_collection(const CredalSet& P, double alpha,
                                  AlphaSide side = AlphaSide::kShrinkToMin);

/// True iff E_p[phi] agrees across all extreme points of P within tol;
/// such an act is useless for hedging.
bool is_crisp(const CredalSet& P, const UtilityAct& phi, double tol = kDefaultTol);

/// The act psi with alpha*phi + (1-alpha)*psi = k*1 exactly.
UtilityAct hedge_partner(const UtilityAct& phi, double alpha, double k);

/// a([f])-weighted mix of worst and best scenario values.
double generalized_alpha_value(const GenAlphaModel& m, const UtilityAct& phi,
                               double tol = kDefaultTol);

/// min of the a([f])-weighted value and the dual (1 - a([f]*))-weighted one.
double cautious_generalized_alpha_value(const GenAlphaModel& m,
                                        const UtilityAct& phi,
                                        double tol = kDefaultTol);

}  // namespace ambit
