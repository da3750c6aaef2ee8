#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ambit/types.hpp"

namespace ambit {

/// A finite grid of beliefs discretizing the simplex: the carrier of grid
/// capacities. Row i of `points` is grid belief i.
struct BeliefGrid {
  Eigen::MatrixXd points;

  Eigen::Index size() const { return points.rows(); }
  Eigen::Index states() const { return points.cols(); }
  Belief point(Eigen::Index i) const { return points.row(i).transpose(); }
};

/// Grid size cap: subsets are bitmasks, capacities fully enumerated.
inline constexpr Eigen::Index kMaxGridPoints = 16;

BeliefGrid validate_grid(const BeliefGrid& grid, double tol = kDefaultTol);

/// A two-state grid of `n` equispaced beliefs (P(state 1) = 0, 1/(n-1), ..., 1).
BeliefGrid equispaced_grid_2(Eigen::Index n);

/// A monotone set function on subsets of the grid with v(empty)=0 and
/// v(full)=1. values[mask] is v of the subset encoded by `mask`.
///
/// Values are quantized to the 2^-40 dyadic lattice at validation so that
/// 1 - v(Q) is exact in double arithmetic; complement-based duality then
/// holds bit-for-bit (see dual_capacity).
struct GridCapacity {
  BeliefGrid grid;
  std::vector<double> values;

  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>((1u << grid.size()) - 1u);
  }
  double value(std::uint32_t mask) const { return values[mask]; }
};

/// Snaps to the dyadic lattice and checks the capacity axioms.
GridCapacity validate_capacity(const GridCapacity& v);

/// The additive capacity induced by a probability on grid points.
GridCapacity additive_capacity(const BeliefGrid& grid, const Eigen::VectorXd& prob);

/// Expected-utility profile of an act over the grid: kappa(p) = E_p[phi].
using KappaProfile = Eigen::VectorXd;

KappaProfile induced_kappa(const BeliefGrid& grid, const UtilityAct& phi);

/// Choquet integral of kappa against v, by the standard finite algorithm:
/// sort grid points by kappa descending and telescope over upper level
/// sets. The sum of products is accumulated exactly (FMA product splitting
/// plus Shewchuk summation) and rounded once, so the result is the
/// correctly rounded value of the exact real sum; in particular it is
/// independent of tie order and satisfies the dual-capacity identity
/// integral(-kappa, v) == -integral(kappa, v*) bit-for-bit.
double choquet_integral(const GridCapacity& v, const KappaProfile& kappa);

/// v*(Q) = 1 - v(complement of Q). Exact on quantized capacities, hence
/// dual_capacity(dual_capacity(v)) == v with bitwise equality.
GridCapacity dual_capacity(const GridCapacity& v);

struct SuperadditivityReport {
  int directions_tested = 0;
  double max_violation = -std::numeric_limits<double>::infinity();
  std::vector<UtilityAct> witnesses;  // directions with integral(k)+integral(-k) > 0

  bool passed() const { return witnesses.empty(); }
};

/// Checks integral(kappa) + integral(-kappa) <= 0 for the kappa profile of
/// every supplied direction.
SuperadditivityReport weak_superadditivity_check(
    const GridCapacity& v, const std::vector<UtilityAct>& directions);

/// min of the integrals against v and its dual.
double cautious_choquet_value(const GridCapacity& v, const UtilityAct& phi);

namespace detail {

/// Correctly rounded sum of a list of doubles (Shewchuk partials, as in
/// CPython's fsum). No overflow handling: operands here are desk-scale.
double exact_sum(std::span<const double> xs);

/// Appends the exact value of a*b to `terms` as a (hi, lo) pair.
void push_product(std::vector<double>& terms, double a, double b);

}  // namespace detail

}  // namespace ambit
