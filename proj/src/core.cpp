#include "ambit/core.hpp"

#include <set>

namespace ambit {

void validate_state_space(const StateSpace& s) {
  detail::require(s.size() >= 2, "state space needs at least two states");
  std::set<std::string> seen(s.labels.begin(), s.labels.end());
  detail::require(static_cast<Eigen::Index>(seen.size()) == s.size(),
                  "state labels must be distinct");
}

void validate_lottery(const Lottery& x, double tol) {
  detail::require(x.weights.size() > 0, "lottery over empty prize set");
  detail::require((x.weights.array() >= -tol).all(), "lottery has negative weight");
  detail::require(std::abs(x.weights.sum() - 1.0) <= tol,
                  "lottery weights must sum to one");
}

Lottery degenerate_lottery(Eigen::Index prize, Eigen::Index n_prizes) {
  detail::require(prize >= 0 && prize < n_prizes, "prize index out of range");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(n_prizes);
  w[prize] = 1.0;
  return Lottery{std::move(w)};
}

void validate_act(const Act& f, double tol) {
  detail::require(f.states() >= 2, "act needs at least two states");
  for (Eigen::Index s = 0; s < f.states(); ++s) validate_lottery(f.lottery(s), tol);
}

void validate_utility(const UtilityFunction& u, double tol) {
  detail::require(u.values.size() >= 2, "utility needs at least two prizes");
  detail::require(u.values.maxCoeff() - u.values.minCoeff() > tol,
                  "utility function must be nonconstant");
}

double lottery_utility(const Lottery& x, const UtilityFunction& u) {
  detail::require(x.weights.size() == u.values.size(),
                  "lottery and utility defined over different prize sets");
  return x.weights.dot(u.values);
}

UtilityAct utility_act(const Act& f, const UtilityFunction& u) {
  detail::require(f.prizes() == u.values.size(),
                  "act and utility defined over different prize sets");
  return f.weights * u.values;
}

Act mix_acts(const Act& f, const Act& g, double alpha) {
  detail::require(alpha >= 0.0 && alpha <= 1.0, "mixture weight outside [0,1]");
  detail::require(f.weights.rows() == g.weights.rows() &&
                      f.weights.cols() == g.weights.cols(),
                  "acts of different shape");
  return Act{alpha * f.weights + (1.0 - alpha) * g.weights};
}

UtilityAct mix_utility_acts(const UtilityAct& phi, const UtilityAct& psi, double alpha) {
  detail::require(alpha >= 0.0 && alpha <= 1.0, "mixture weight outside [0,1]");
  detail::require(phi.size() == psi.size(), "utility acts of different dimension");
  return alpha * phi + (1.0 - alpha) * psi;
}

UtilityAct constant_utility_act(double k, Eigen::Index n) {
  detail::require(n >= 2, "state space needs at least two states");
  return Eigen::VectorXd::Constant(n, k);
}

}  // namespace ambit
