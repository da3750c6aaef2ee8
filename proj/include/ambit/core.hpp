#pragma once

#include <string>
#include <vector>

#include "ambit/types.hpp"

namespace ambit {

/// A finite state space with named states.
struct StateSpace {
  std::vector<std::string> labels;

  Eigen::Index size() const { return static_cast<Eigen::Index>(labels.size()); }
};

/// Checks size >= 2 and distinct labels.
void validate_state_space(const StateSpace& s);

/// A lottery over prizes: nonnegative weights summing to one.
struct Lottery {
  Eigen::VectorXd weights;  // one entry per prize
};

/// Checks nonnegativity and sum-to-one within 1e-12.
void validate_lottery(const Lottery& x, double tol = 1e-12);

/// Degenerate lottery on a single prize.
Lottery degenerate_lottery(Eigen::Index prize, Eigen::Index n_prizes);

/// An act: one lottery per state. Row s of `weights` is the lottery played
/// in state s; columns index prizes.
struct Act {
  Eigen::MatrixXd weights;  // states x prizes

  Eigen::Index states() const { return weights.rows(); }
  Eigen::Index prizes() const { return weights.cols(); }
  Lottery lottery(Eigen::Index s) const { return Lottery{weights.row(s).transpose()}; }
};

void validate_act(const Act& f, double tol = 1e-12);

/// Affine utility on lotteries, given by its values on prizes.
struct UtilityFunction {
  Eigen::VectorXd values;  // one utility per prize
};

/// Checks the function is nonconstant (at least two distinct values).
void validate_utility(const UtilityFunction& u, double tol = kDefaultTol);

/// Expected utility of a lottery.
double lottery_utility(const Lottery& x, const UtilityFunction& u);

/// The utility act u(f): state-wise expected utility of f's lotteries.
UtilityAct utility_act(const Act& f, const UtilityFunction& u);

/// State-wise mixture alpha*f + (1-alpha)*g at the act level.
Act mix_acts(const Act& f, const Act& g, double alpha);

/// alpha*phi + (1-alpha)*psi componentwise. Valid because u is affine.
UtilityAct mix_utility_acts(const UtilityAct& phi, const UtilityAct& psi, double alpha);

/// Vector of n copies of k.
UtilityAct constant_utility_act(double k, Eigen::Index n);

}  // namespace ambit
