#include "ambit/representations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ambit {

bool Signature::total_tie() const {
  return std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 0; });
}

std::string Signature::to_string() const {
  // order indices by rank, separating rank groups with '>' and ties with '~'
  std::vector<int> idx(ranks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return ranks[a] < ranks[b]; });
  std::ostringstream os;
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (j > 0) os << (ranks[idx[j]] == ranks[idx[j - 1]] ? " ~ " : " > ");
    os << "p" << (idx[j] + 1);
  }
  return os.str();
}

Signature signature(const CredalSet& P, const UtilityAct& phi, double tol) {
  detail::require(P.dim() == phi.size(), "belief/act dimension mismatch");
  const Eigen::VectorXd values = P.points * phi;
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return values[a] > values[b]; });
  Signature sig;
  sig.ranks.assign(values.size(), 0);
  int rank = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    if (values[idx[j - 1]] - values[idx[j]] > tol) ++rank;
    sig.ranks[idx[j]] = rank;
  }
  return sig;
}

Signature dual_signature(const Signature& sig) {
  detail::require(!sig.ranks.empty(), "empty signature");
  const int top = *std::max_element(sig.ranks.begin(), sig.ranks.end());
  Signature out;
  out.ranks.reserve(sig.ranks.size());
  for (int r : sig.ranks) out.ranks.push_back(top - r);
  return out;
}

double WeightFunction::weight(const Signature& sig) const {
  auto it = assigned.find(sig);
  return it == assigned.end() ? fallback : it->second;
}

void WeightFunction::set(const Signature& sig, double w) {
  detail::require(w >= 0.0 && w <= 1.0, "weight outside [0,1]");
  assigned[sig] = w;
}

std::string to_string(SelectedGame g) {
  switch (g) {
    case SelectedGame::kOptimismFirst: return "optimism-first";
    case SelectedGame::kPessimismFirst: return "pessimism-first";
    default: return "tie";
  }
}

double maxmin_value(const CredalSet& P, const UtilityAct& phi) {
  return min_expectation(P, phi);
}

double dual_self_value(const BeliefCollection& coll, const UtilityAct& phi) {
  detail::require(!coll.sets.empty(), "empty belief collection");
  double best = -std::numeric_limits<double>::infinity();
  for (const CredalSet& P : coll.sets) best = std::max(best, min_expectation(P, phi));
  return best;
}

double dual_self_value_pessimism_first(const BeliefCollection& coll,
                                       const UtilityAct& phi) {
  detail::require(!coll.sets.empty(), "empty belief collection");
  double worst = std::numeric_limits<double>::infinity();
  for (const CredalSet& P : coll.sets) worst = std::min(worst, max_expectation(P, phi));
  return worst;
}

double cautious_dual_self_value(const BeliefCollection& coll, const UtilityAct& phi) {
  return std::min(dual_self_value(coll, phi),
                  dual_self_value_pessimism_first(coll, phi));
}

SelectedGame selected_game(const BeliefCollection& coll, const UtilityAct& phi,
                           double tol) {
  const double opt = dual_self_value(coll, phi);
  const double pes = dual_self_value_pessimism_first(coll, phi);
  if (opt <= pes - tol) return SelectedGame::kOptimismFirst;
  if (pes <= opt - tol) return SelectedGame::kPessimismFirst;
  return SelectedGame::kTie;
}

double alpha_maxmin_value(const CredalSet& P, double alpha, const UtilityAct& phi) {
  detail::require(alpha >= 0.0 && alpha <= 1.0, "alpha outside [0,1]");
  return alpha * min_expectation(P, phi) + (1.0 - alpha) * max_expectation(P, phi);
}

BeliefCollection alpha_collection(const CredalSet& P, double alpha, AlphaSide side) {
  detail::require(alpha >= 0.0 && alpha <= 1.0, "alpha outside [0,1]");
  BeliefCollection coll;
  coll.sets.reserve(P.size());
  for (Eigen::Index i = 0; i < P.size(); ++i) {
    CredalSet s;
    if (side == AlphaSide::kShrinkToMin) {
      // alpha*P + (1-alpha){p_i}
      s.points = alpha * P.points +
                 (1.0 - alpha) * P.points.row(i).replicate(P.size(), 1);
    } else {
      // alpha{p_i} + (1-alpha)*P
      s.points = alpha * P.points.row(i).replicate(P.size(), 1) +
                 (1.0 - alpha) * P.points;
    }
    coll.sets.push_back(std::move(s));
  }
  return coll;
}

bool is_crisp(const CredalSet& P, const UtilityAct& phi, double tol) {
  detail::require(P.dim() == phi.size(), "belief/act dimension mismatch");
  const Eigen::VectorXd values = P.points * phi;
  return values.maxCoeff() - values.minCoeff() <= tol;
}

UtilityAct hedge_partner(const UtilityAct& phi, double alpha, double k) {
  detail::require(alpha > 0.0 && alpha < 1.0, "hedge weight must lie in (0,1)");
  return (Eigen::VectorXd::Constant(phi.size(), k) - alpha * phi) / (1.0 - alpha);
}

double generalized_alpha_value(const GenAlphaModel& m, const UtilityAct& phi,
                               double tol) {
  const double a = m.weights.weight(signature(m.reference, phi, tol));
  return a * min_expectation(m.reference, phi) +
         (1.0 - a) * max_expectation(m.reference, phi);
}

double cautious_generalized_alpha_value(const GenAlphaModel& m,
                                        const UtilityAct& phi, double tol) {
  const Signature sig = signature(m.reference, phi, tol);
  const double a = m.weights.weight(sig);
  const double a_dual = m.weights.weight(dual_signature(sig));
  const double lo = min_expectation(m.reference, phi);
  const double hi = max_expectation(m.reference, phi);
  return std::min(a * lo + (1.0 - a) * hi,
                  (1.0 - a_dual) * lo + a_dual * hi);
}

}  // namespace ambit
