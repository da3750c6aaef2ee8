#include "ambit/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ambit/beliefs.hpp"

namespace ambit {

namespace detail {

double exact_sum(std::span<const double> xs) {
  std::vector<double> partials;
  for (double x : xs) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < partials.size(); ++j) {
      double y = partials[j];
      if (std::fabs(x) < std::fabs(y)) std::swap(x, y);
      const double hi = x + y;
      const double lo = y - (hi - x);
      if (lo != 0.0) partials[i++] = lo;
      x = hi;
    }
    partials.resize(i);
    partials.push_back(x);
  }
  if (partials.empty()) return 0.0;
  // Round from the top down; the half-way correction mirrors fsum.
  std::size_t n = partials.size();
  double hi = partials[--n];
  double lo = 0.0;
  while (n > 0) {
    const double x = hi;
    const double y = partials[--n];
    hi = x + y;
    const double yr = hi - x;
    lo = y - yr;
    if (lo != 0.0) break;
  }
  if (n > 0 && ((lo < 0.0 && partials[n - 1] < 0.0) ||
                (lo > 0.0 && partials[n - 1] > 0.0))) {
    const double y = lo * 2.0;
    const double x = hi + y;
    if (y == x - hi) hi = x;
  }
  return hi;
}

void push_product(std::vector<double>& terms, double a, double b) {
  const double p = a * b;
  const double e = std::fma(a, b, -p);
  terms.push_back(p);
  if (e != 0.0) terms.push_back(e);
}

namespace {

constexpr double kQuantum = 0x1.0p40;

double snap(double x) { return std::nearbyint(x * kQuantum) / kQuantum; }

}  // namespace
}  // namespace detail

BeliefGrid validate_grid(const BeliefGrid& grid, double tol) {
  detail::require(grid.size() > 0, "empty belief grid");
  detail::require(grid.size() <= kMaxGridPoints, "belief grid too large");
  BeliefGrid out;
  out.points.resize(grid.size(), grid.states());
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    out.points.row(i) = validate_belief(grid.point(i), tol).transpose();
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    for (Eigen::Index j = i + 1; j < grid.size(); ++j)
      detail::require((out.points.row(i) - out.points.row(j)).cwiseAbs().maxCoeff() > tol,
                      "belief grid points must be distinct");
  return out;
}

BeliefGrid equispaced_grid_2(Eigen::Index n) {
  detail::require(n >= 2 && n <= kMaxGridPoints, "grid size out of range");
  BeliefGrid g;
  g.points.resize(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(n - 1);
    g.points(i, 0) = p;
    g.points(i, 1) = 1.0 - p;
  }
  return g;
}

GridCapacity validate_capacity(const GridCapacity& v) {
  GridCapacity out;
  out.grid = validate_grid(v.grid);
  const std::size_t n_masks = std::size_t{1} << out.grid.size();
  detail::require(v.values.size() == n_masks,
                  "capacity must assign a value to every subset");
  out.values.resize(n_masks);
  for (std::size_t m = 0; m < n_masks; ++m) {
    detail::require(std::isfinite(v.values[m]), "capacity value not finite");
    out.values[m] = detail::snap(v.values[m]);
  }
  detail::require(out.values[0] == 0.0, "capacity of the empty set must be 0");
  detail::require(out.values[n_masks - 1] == 1.0, "capacity of the full grid must be 1");
  for (std::size_t m = 0; m < n_masks; ++m)
    for (Eigen::Index b = 0; b < out.grid.size(); ++b) {
      const std::size_t with = m | (std::size_t{1} << b);
      detail::require(out.values[m] <= out.values[with], "capacity not monotone");
    }
  return out;
}

GridCapacity additive_capacity(const BeliefGrid& grid, const Eigen::VectorXd& prob) {
  detail::require(prob.size() == grid.size(), "probability/grid size mismatch");
  detail::require((prob.array() >= 0.0).all(), "probability has negative mass");
  detail::require(std::abs(prob.sum() - 1.0) <= kDefaultTol,
                  "probability mass is not one");
  GridCapacity v;
  v.grid = grid;
  const std::size_t n_masks = std::size_t{1} << grid.size();
  v.values.assign(n_masks, 0.0);
  for (std::size_t m = 1; m < n_masks; ++m) {
    double s = 0.0;
    for (Eigen::Index b = 0; b < grid.size(); ++b)
      if (m & (std::size_t{1} << b)) s += prob[b];
    v.values[m] = std::min(s, 1.0);
  }
  v.values[n_masks - 1] = 1.0;
  return validate_capacity(v);
}

KappaProfile induced_kappa(const BeliefGrid& grid, const UtilityAct& phi) {
  detail::require(grid.states() == phi.size(), "grid/act dimension mismatch");
  return grid.points * phi;
}

double choquet_integral(const GridCapacity& v, const KappaProfile& kappa) {
  const Eigen::Index n = v.grid.size();
  detail::require(kappa.size() == n, "kappa profile does not match the grid");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return kappa[a] > kappa[b]; });
  // Sum of kappa_(i) * [v(A_i) - v(A_{i-1})] over descending ranks, with the
  // difference expanded into two exact products so no intermediate rounds.
  std::vector<double> terms;
  terms.reserve(4 * static_cast<std::size_t>(n));
  std::uint32_t mask = 0;
  double prev = 0.0;  // v(A_0) = v(empty) = 0
  for (Eigen::Index i = 0; i < n; ++i) {
    mask |= (1u << order[i]);
    const double cur = v.value(mask);
    const double k = kappa[order[i]];
    detail::push_product(terms, k, cur);
    if (prev != 0.0) detail::push_product(terms, -k, prev);
    prev = cur;
  }
  return detail::exact_sum(terms);
}

GridCapacity dual_capacity(const GridCapacity& v) {
  GridCapacity out;
  out.grid = v.grid;
  const std::uint32_t full = v.full_mask();
  out.values.resize(v.values.size());
  for (std::uint32_t m = 0; m <= full; ++m)
    out.values[m] = 1.0 - v.values[full ^ m];
  return out;
}

SuperadditivityReport weak_superadditivity_check(
    const GridCapacity& v, const std::vector<UtilityAct>& directions) {
  SuperadditivityReport report;
  for (const UtilityAct& dir : directions) {
    const KappaProfile kappa = induced_kappa(v.grid, dir);
    const double gap = choquet_integral(v, kappa) + choquet_integral(v, -kappa);
    ++report.directions_tested;
    report.max_violation = std::max(report.max_violation, gap);
    if (gap > 0.0) report.witnesses.push_back(dir);
  }
  return report;
}

double cautious_choquet_value(const GridCapacity& v, const UtilityAct& phi) {
  const KappaProfile kappa = induced_kappa(v.grid, phi);
  return std::min(choquet_integral(v, kappa),
                  choquet_integral(dual_capacity(v), kappa));
}

}  // namespace ambit
