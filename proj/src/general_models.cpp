#include "ambit/general_models.hpp"

#include <algorithm>
#include <cmath>

#include "ambit/representations.hpp"

namespace ambit {

double PiecewiseLinear::operator()(double t) const {
  // find the segment whose left breakpoint is the last one <= t
  std::size_t seg;
  if (t <= xs.front()) {
    seg = 0;
  } else if (t >= xs.back()) {
    seg = xs.size() - 2;
  } else {
    seg = static_cast<std::size_t>(
              std::upper_bound(xs.begin(), xs.end(), t) - xs.begin()) - 1;
  }
  return ys[seg] + slope(seg) * (t - xs[seg]);
}

double PiecewiseLinear::slope(std::size_t segment) const {
  return (ys[segment + 1] - ys[segment]) / (xs[segment + 1] - xs[segment]);
}

PiecewiseLinear identity_pl() { return PiecewiseLinear{{0.0, 1.0}, {0.0, 1.0}}; }

PiecewiseLinear reflect_pl(const PiecewiseLinear& f) {
  PiecewiseLinear out;
  out.xs.reserve(f.xs.size());
  out.ys.reserve(f.ys.size());
  for (auto it = f.xs.rbegin(); it != f.xs.rend(); ++it) out.xs.push_back(-*it);
  for (auto it = f.ys.rbegin(); it != f.ys.rend(); ++it) out.ys.push_back(-*it);
  return out;
}

void validate_pl(const PiecewiseLinear& f) {
  detail::require(f.xs.size() >= 2 && f.xs.size() == f.ys.size(),
                  "piecewise-linear function needs at least two breakpoints");
  for (std::size_t i = 1; i < f.xs.size(); ++i)
    detail::require(f.xs[i] > f.xs[i - 1], "breakpoints must be strictly increasing");
  for (double y : f.ys) detail::require(std::isfinite(y), "breakpoint value not finite");
}

bool pl_increasing(const PiecewiseLinear& f, double tol) {
  for (std::size_t s = 0; s < f.segments(); ++s)
    if (f.slope(s) < -tol) return false;
  return true;
}

bool pl_convex(const PiecewiseLinear& f, double tol) {
  for (std::size_t s = 1; s < f.segments(); ++s)
    if (f.slope(s) < f.slope(s - 1) - tol) return false;
  return true;
}

void validate_cost(const CostFunction& c) {
  detail::require(c.costs.size() > 0, "empty cost function");
  bool any_finite = false;
  for (Eigen::Index i = 0; i < c.costs.size(); ++i) {
    detail::require(!std::isnan(c.costs[i]), "cost is NaN");
    detail::require(c.costs[i] > -std::numeric_limits<double>::infinity(),
                    "cost must be bounded below");
    if (std::isfinite(c.costs[i])) any_finite = true;
  }
  detail::require(any_finite, "cost function has no finite entry");
}

CostCollection validate_cost_collection(const CostCollection& coll, double tol) {
  CostCollection out;
  out.grid = validate_grid(coll.grid, tol);
  detail::require(!coll.costs.empty(), "empty cost collection");
  double max_min = -std::numeric_limits<double>::infinity();
  for (const CostFunction& c : coll.costs) {
    detail::require(c.costs.size() == out.grid.size(), "cost/grid size mismatch");
    validate_cost(c);
    max_min = std::max(max_min, c.costs.minCoeff());
    out.costs.push_back(c);
  }
  detail::require(std::abs(max_min) <= tol,
                  "cost collection must satisfy max_c min_p c = 0");
  return out;
}

CostCollection normalize_cost_collection(CostCollection coll) {
  detail::require(!coll.costs.empty(), "empty cost collection");
  double max_min = -std::numeric_limits<double>::infinity();
  for (const CostFunction& c : coll.costs)
    max_min = std::max(max_min, c.costs.minCoeff());
  for (CostFunction& c : coll.costs) c.costs.array() -= max_min;
  return coll;
}

namespace {

double max_of_min(const std::vector<CostFunction>& costs, const KappaProfile& kappa,
                  double sign) {
  // sign=+1: max_c min_p kappa + c ; sign=-1: min_c max_p kappa - c (negated form)
  double best = -std::numeric_limits<double>::infinity();
  for (const CostFunction& c : costs) {
    double inner = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner = std::min(inner, kappa[i] + sign * c.costs[i]);
    best = std::max(best, inner);
  }
  return best;
}

}  // namespace

double variational_dual_self_value(const CostCollection& coll, const UtilityAct& phi) {
  return max_of_min(coll.costs, induced_kappa(coll.grid, phi), +1.0);
}

double variational_dual_self_value_pessimism_first(const CostCollection& coll,
                                                   const UtilityAct& phi) {
  const KappaProfile kappa = induced_kappa(coll.grid, phi);
  double worst = std::numeric_limits<double>::infinity();
  for (const CostFunction& c : coll.costs) {
    double inner = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner = std::max(inner, kappa[i] - c.costs[i]);
    worst = std::min(worst, inner);
  }
  return worst;
}

double variational_cautious_value(const CostCollection& coll, const UtilityAct& phi) {
  return std::min(variational_dual_self_value(coll, phi),
                  variational_dual_self_value_pessimism_first(coll, phi));
}

UtilityAct complementary_partner(const UtilityAct& phi) { return -phi; }

void validate_g_function(const GFunction& g, double tol) {
  validate_pl(g.h);
  detail::require(pl_increasing(g.h, tol), "G must be increasing in t");
  detail::require(g.costs.size() > 0, "G has no grid section");
  for (Eigen::Index i = 0; i < g.costs.size(); ++i)
    detail::require(!std::isnan(g.costs[i]), "G section offset is NaN");
}

GFunction dual_g(const GFunction& g) { return GFunction{reflect_pl(g.h), -g.costs}; }

GCollection validate_g_collection(const GCollection& coll, double tol) {
  GCollection out;
  out.grid = validate_grid(coll.grid, tol);
  detail::require(!coll.functions.empty(), "empty G collection");
  double envelope = -std::numeric_limits<double>::infinity();
  for (const GFunction& g : coll.functions) {
    validate_g_function(g, tol);
    detail::require(g.costs.size() == out.grid.size(), "G/grid size mismatch");
    // Normalization over all real gamma forces affine slope-1 t-sections.
    for (std::size_t s = 0; s < g.h.segments(); ++s)
      detail::require(std::abs(g.h.slope(s) - 1.0) <= tol,
                      "normalization over all of R requires slope-1 t-sections");
    const double intercept = g.h.ys.front() - g.h.xs.front();  // h(t) = t + b
    double min_cost = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < g.costs.size(); ++i)
      min_cost = std::min(min_cost, g.costs[i]);
    detail::require(intercept + min_cost <= tol,
                    "component exceeds the identity envelope");
    envelope = std::max(envelope, intercept + min_cost);
    out.functions.push_back(g);
  }
  detail::require(std::abs(envelope) <= tol,
                  "G collection must satisfy max_G inf_p G(gamma,p) = gamma");
  return out;
}

double rational_dual_self_value(const GCollection& coll, const UtilityAct& phi) {
  const KappaProfile kappa = induced_kappa(coll.grid, phi);
  double best = -std::numeric_limits<double>::infinity();
  for (const GFunction& g : coll.functions) {
    double inner = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner = std::min(inner, g(kappa[i], i));
    best = std::max(best, inner);
  }
  return best;
}

double rational_cautious_value(const GCollection& coll, const UtilityAct& phi) {
  const KappaProfile kappa = induced_kappa(coll.grid, phi);
  double optimism = -std::numeric_limits<double>::infinity();
  double pessimism = std::numeric_limits<double>::infinity();
  for (const GFunction& g : coll.functions) {
    double inner_min = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner_min = std::min(inner_min, g(kappa[i], i));
    optimism = std::max(optimism, inner_min);

    const GFunction dual = dual_g(g);
    double inner_max = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner_max = std::max(inner_max, dual(kappa[i], i));
    pessimism = std::min(pessimism, inner_max);
  }
  return std::min(optimism, pessimism);
}

namespace {

// Kinked-linear cost on the two-state grid: a*|p - p0| + b*(p - p0), with p
// the probability of state 1 at each grid point.
CostFunction kinked_cost(const BeliefGrid& grid, double a, double b, double p0) {
  CostFunction c;
  c.costs.resize(grid.size());
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double p = grid.points(i, 0);
    c.costs[i] = a * std::abs(p - p0) + b * (p - p0);
  }
  return c;
}

// Closed-form chord screen along d = (1,-1). W(t) = min{A(t d), -A(-t d)};
// a WUA violation at weight alpha != 1/2 exists iff some origin chord of W
// has positive value: alpha*W(t1) + (1-alpha)*W(t2) > 0 with
// alpha*t1 + (1-alpha)*t2 = 0.
bool chord_screen(const CostCollection& coll, double margin, double* out_t1,
                  double* out_t2) {
  const Eigen::Index m = coll.grid.size();
  auto A = [&](double t) {
    double best = -std::numeric_limits<double>::infinity();
    for (const CostFunction& c : coll.costs) {
      double inner = std::numeric_limits<double>::infinity();
      for (Eigen::Index i = 0; i < m; ++i) {
        const double e = t * (2.0 * coll.grid.points(i, 0) - 1.0);
        inner = std::min(inner, e + c.costs[i]);
      }
      best = std::max(best, inner);
    }
    return best;
  };
  constexpr int kSteps = 40;
  constexpr double kRange = 2.0;
  std::vector<double> w(2 * kSteps + 1);
  for (int i = -kSteps; i <= kSteps; ++i) {
    const double t = kRange * i / kSteps;
    w[i + kSteps] = std::min(A(t), -A(-t));
  }
  for (int i = 1; i <= kSteps; ++i) {
    for (int j = -kSteps; j < 0; ++j) {
      if (i == -j) continue;  // alpha = 1/2 is simple diversification
      const double t1 = kRange * i / kSteps;
      const double t2 = kRange * j / kSteps;
      const double alpha = -t2 / (t1 - t2);
      if (alpha * w[i + kSteps] + (1.0 - alpha) * w[j + kSteps] > margin) {
        *out_t1 = t1;
        *out_t2 = t2;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::optional<WuaCounterexample> search_wua_counterexample(const WuaSearchConfig& cfg) {
  const BeliefGrid grid = equispaced_grid_2(cfg.grid_points);
  Rng rng(cfg.seed);
  const auto lattice = [&](double lo, double hi, double step) {
    const int n = static_cast<int>(std::lround((hi - lo) / step)) + 1;
    return lo + step * static_cast<double>(rng.below(n));
  };

  for (int trial = 0; trial < cfg.budget; ++trial) {
    CostCollection cand;
    cand.grid = grid;
    const int n_costs = 2 + static_cast<int>(rng.below(cfg.max_costs - 1));
    for (int c = 0; c < n_costs; ++c) {
      const double a = lattice(0.0, 2.0, 0.1);
      const double b = lattice(-2.0, 2.0, 0.1);
      const double p0 = grid.points(rng.below(grid.size()), 0);
      cand.costs.push_back(kinked_cost(grid, a, b, p0));
    }
    cand = normalize_cost_collection(std::move(cand));

    double t1 = 0.0, t2 = 0.0;
    if (!chord_screen(cand, cfg.violation_margin, &t1, &t2)) continue;

    // Confirm the screened hit through the calibrated construction.
    const UtilityAct phi = t1 * (Eigen::VectorXd(2) << 1.0, -1.0).finished();
    const double alpha = -t2 / (t1 - t2);
    const double value = variational_cautious_value(cand, phi);
    // k such that V(hedge_partner(phi, alpha, k)) = V(phi), by bisection.
    double lo = phi.minCoeff() - 8.0, hi = phi.maxCoeff() + 8.0;
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (variational_cautious_value(cand, hedge_partner(phi, alpha, mid)) < value)
        lo = mid;
      else
        hi = mid;
    }
    const double k = 0.5 * (lo + hi);
    const UtilityAct partner = hedge_partner(phi, alpha, k);
    if (std::abs(variational_cautious_value(cand, partner) - value) > 1e-8) continue;
    if (k >= value - cfg.violation_margin) continue;

    WuaCounterexample found;
    found.collection = cand;
    found.phi = phi;
    found.alpha = alpha;
    found.hedge_level = k;
    found.value = value;
    found.optimism_branch = variational_dual_self_value(cand, phi);
    found.pessimism_branch = variational_dual_self_value_pessimism_first(cand, phi);
    found.candidates_tried = trial + 1;
    return found;
  }
  return std::nullopt;
}

}  // namespace ambit
