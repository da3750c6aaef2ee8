#include "ambit/axiom_lab.hpp"

#include <algorithm>
#include <cmath>

#include "ambit/core.hpp"

namespace ambit {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr int kBisectMaxIter = 200;

double violation_margin(const SampleConfig& cfg) { return 10.0 * cfg.tol; }

// Bisection for increasing f with f(lo) <= target <= f(hi).
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double target) {
  for (int it = 0; it < kBisectMaxIter && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

void validate_sample_config(const SampleConfig& cfg) {
  detail::require(cfg.states >= 2, "need at least two states");
  detail::require(cfg.samples > 0, "sample count must be positive");
  detail::require(cfg.tol > 0.0, "tolerance must be positive");
  detail::require(cfg.hi > cfg.lo, "empty utility range");
  detail::require(cfg.lattice_step > 0.0, "lattice step must be positive");
}

std::optional<double> indifference_constant(const Functional& V,
                                            const UtilityAct& phi, double alpha,
                                            double tol) {
  detail::require(alpha > 0.0 && alpha < 1.0, "hedge weight must lie in (0,1)");
  const double target = V(phi);
  const double pad = 1.0 + 0.5 * (phi.maxCoeff() - phi.minCoeff());
  const double lo = phi.minCoeff() - pad;
  const double hi = phi.maxCoeff() + pad;
  const auto value_at = [&](double k) { return V(hedge_partner(phi, alpha, k)); };
  if (!(value_at(lo) <= target && target <= value_at(hi))) return std::nullopt;
  const double k = bisect(value_at, lo, hi, target);
  if (std::abs(value_at(k) - target) > std::max(tol, 100.0 * kBisectTol))
    return std::nullopt;
  return k;
}

std::optional<double> certainty_equivalent(const Functional& V, const UtilityAct& phi,
                                           double tol) {
  const double target = V(phi);
  const double lo = phi.minCoeff() - 1.0;
  const double hi = phi.maxCoeff() + 1.0;
  const Eigen::Index n = phi.size();
  const auto value_at = [&](double x) {
    return V(Eigen::VectorXd::Constant(n, x));
  };
  if (!(value_at(lo) <= target && target <= value_at(hi))) return std::nullopt;
  const double x = bisect(value_at, lo, hi, target);
  if (std::abs(value_at(x) - target) > std::max(tol, 100.0 * kBisectTol))
    return std::nullopt;
  return x;
}

namespace {

AxiomReport run_hedge_check(const Functional& V, const SampleConfig& cfg,
                            std::string axiom, bool fixed_half_alpha) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = std::move(axiom);
  report.functional = V.name;
  report.seed = cfg.seed;
  // Acts and weights come from separate substreams so checks that must
  // agree act-by-act (weak uncertainty aversion vs simple diversification)
  // see the same act sequence.
  Rng act_rng(cfg.seed);
  Rng alpha_rng = act_rng.split(0xa1);
  const double margin = violation_margin(cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const UtilityAct phi = random_act(act_rng, cfg.states, cfg.lo, cfg.hi);
    const double alpha = fixed_half_alpha ? 0.5 : alpha_rng.uniform(0.1, 0.9);
    const auto k = indifference_constant(V, phi, alpha, cfg.tol);
    if (!k) {
      ++report.skipped;
      continue;
    }
    ++report.samples_tested;
    const double v_phi = V(phi);
    if (*k < v_phi - margin) {
      AxiomViolation v;
      v.sample_index = i;
      v.phi = phi;
      v.partner = hedge_partner(phi, alpha, *k);
      v.alpha = alpha;
      v.level = *k;
      v.v_phi = v_phi;
      v.v_partner = V(v.partner);
      v.margin = v_phi - *k;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

}  // namespace

AxiomReport check_weak_uncertainty_aversion(const Functional& V,
                                            const SampleConfig& cfg) {
  return run_hedge_check(V, cfg, "weak-uncertainty-aversion", false);
}

AxiomReport check_simple_diversification(const Functional& V, const SampleConfig& cfg) {
  return run_hedge_check(V, cfg, "simple-diversification", true);
}

AxiomReport check_uncertainty_aversion(const Functional& V, const SampleConfig& cfg) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = "uncertainty-aversion";
  report.functional = V.name;
  report.seed = cfg.seed;
  Rng rng(cfg.seed);
  const double margin = violation_margin(cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const UtilityAct phi = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    const double alpha = rng.uniform(0.1, 0.9);
    const double target = V(phi);
    // Partner calibrated to indifference along a strictly positive
    // direction; V is monotone there, so the bracket is sound.
    UtilityAct base = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    UtilityAct dir(cfg.states);
    for (Eigen::Index j = 0; j < cfg.states; ++j) dir[j] = rng.uniform(0.2, 1.0);
    const double span = cfg.hi - cfg.lo;
    const double t_hi = 2.0 * span + 2.0;
    const auto value_at = [&](double t) { return V(base + t * dir); };
    if (!(value_at(-t_hi) <= target && target <= value_at(t_hi))) {
      ++report.skipped;
      continue;
    }
    const double t = bisect(value_at, -t_hi, t_hi, target);
    const UtilityAct psi = base + t * dir;
    if (std::abs(V(psi) - target) > std::max(cfg.tol, 100.0 * kBisectTol)) {
      ++report.skipped;
      continue;
    }
    ++report.samples_tested;
    const UtilityAct mix = mix_utility_acts(phi, psi, alpha);
    const double v_mix = V(mix);
    if (v_mix < target - margin) {
      AxiomViolation v;
      v.sample_index = i;
      v.phi = phi;
      v.partner = psi;
      v.alpha = alpha;
      v.v_phi = target;
      v.v_partner = v_mix;
      v.margin = target - v_mix;
      v.note = "mixture valued below the indifferent pair";
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

AxiomReport check_invariant_biseparable(const Functional& V, const SampleConfig& cfg) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = "invariant-biseparable";
  report.functional = V.name;
  report.seed = cfg.seed;
  Rng rng(cfg.seed);
  const double margin = violation_margin(cfg);
  constexpr double factors[] = {0.25, 0.5, 2.0, 4.0};
  for (int i = 0; i < cfg.samples; ++i) {
    const UtilityAct phi = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    const double v_phi = V(phi);
    ++report.samples_tested;
    for (double a : factors) {
      const double got = V(a * phi);
      const double want = a * v_phi;
      if (std::abs(got - want) > margin * std::max(1.0, a)) {
        report.violations.push_back({i, phi, a * phi, a, 0.0, want, got,
                                     std::abs(got - want), "homogeneity"});
      }
    }
    const double shift = rng.uniform(cfg.lo, cfg.hi);
    const UtilityAct shifted = phi.array() + shift;
    const double got = V(shifted);
    if (std::abs(got - (v_phi + shift)) > margin) {
      report.violations.push_back({i, phi, shifted, 0.0, shift, v_phi + shift, got,
                                   std::abs(got - v_phi - shift),
                                   "constant additivity"});
    }
    UtilityAct lower = phi;
    for (Eigen::Index j = 0; j < cfg.states; ++j) lower[j] -= rng.uniform(0.0, 1.0);
    if (V(lower) > v_phi + margin) {
      report.violations.push_back({i, phi, lower, 0.0, 0.0, v_phi, V(lower),
                                   V(lower) - v_phi, "monotonicity"});
    }
  }
  return report;
}

AxiomReport check_weak_certainty_independence(const Functional& V,
                                              const SampleConfig& cfg) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = "weak-certainty-independence";
  report.functional = V.name;
  report.seed = cfg.seed;
  Rng rng(cfg.seed);
  const double margin = violation_margin(cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const UtilityAct phi = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    const UtilityAct psi = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    const double alpha = rng.uniform(0.1, 0.9);
    const double x = rng.uniform(cfg.lo, cfg.hi);
    const double y = rng.uniform(cfg.lo, cfg.hi);
    const auto diff_at = [&](double c) {
      const UtilityAct constant = Eigen::VectorXd::Constant(cfg.states, c);
      return V(mix_utility_acts(phi, constant, alpha)) -
             V(mix_utility_acts(psi, constant, alpha));
    };
    const double at_x = diff_at(x);
    const double at_y = diff_at(y);
    ++report.samples_tested;
    if ((at_x > margin && at_y < -margin) || (at_x < -margin && at_y > margin)) {
      AxiomViolation v;
      v.sample_index = i;
      v.phi = phi;
      v.partner = psi;
      v.alpha = alpha;
      v.level = x;
      v.v_phi = at_x;
      v.v_partner = at_y;
      v.margin = std::min(std::abs(at_x), std::abs(at_y));
      v.note = "comparison sign flipped between constants";
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

AxiomReport check_risk_independence(const Functional& V, const SampleConfig& cfg) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = "risk-independence";
  report.functional = V.name;
  report.seed = cfg.seed;
  Rng rng(cfg.seed);
  const double margin = violation_margin(cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const double x = rng.uniform(cfg.lo, cfg.hi);
    const double y = rng.uniform(cfg.lo, cfg.hi);
    const double z = rng.uniform(cfg.lo, cfg.hi);
    const double alpha = rng.uniform(0.1, 0.9);
    ++report.samples_tested;
    const double vx = V(Eigen::VectorXd::Constant(cfg.states, x));
    if (std::abs(vx - x) > margin) {
      report.violations.push_back({i, Eigen::VectorXd::Constant(cfg.states, x), {},
                                   0.0, x, x, vx, std::abs(vx - x),
                                   "not faithful on constants"});
      continue;
    }
    const double mx = V(Eigen::VectorXd::Constant(cfg.states, alpha * x + (1 - alpha) * z));
    const double my = V(Eigen::VectorXd::Constant(cfg.states, alpha * y + (1 - alpha) * z));
    const bool before = x >= y + margin;
    const bool after = mx >= my - margin;
    if (before && !after) {
      report.violations.push_back({i, Eigen::VectorXd::Constant(cfg.states, x),
                                   Eigen::VectorXd::Constant(cfg.states, y), alpha, z,
                                   mx, my, my - mx, "mixing flipped constant order"});
    }
  }
  return report;
}

AxiomReport check_monotonicity(const Functional& V, const SampleConfig& cfg) {
  validate_sample_config(cfg);
  AxiomReport report;
  report.axiom = "monotonicity";
  report.functional = V.name;
  report.seed = cfg.seed;
  Rng rng(cfg.seed);
  const double margin = violation_margin(cfg);
  for (int i = 0; i < cfg.samples; ++i) {
    const UtilityAct phi = random_act(rng, cfg.states, cfg.lo, cfg.hi);
    UtilityAct psi = phi;
    for (Eigen::Index j = 0; j < cfg.states; ++j) psi[j] -= rng.uniform(0.0, 2.0);
    ++report.samples_tested;
    const double v_phi = V(phi);
    const double v_psi = V(psi);
    if (v_phi < v_psi - margin) {
      report.violations.push_back(
          {i, phi, psi, 0.0, 0.0, v_phi, v_psi, v_psi - v_phi, "dominated pair"});
    }
  }
  return report;
}

EquivReport brute_force_equiv(const Functional& V1, const Functional& V2,
                              const SampleConfig& cfg) {
  validate_sample_config(cfg);
  EquivReport report;
  report.left = V1.name;
  report.right = V2.name;
  const auto probe = [&](const UtilityAct& phi) {
    const double gap = std::abs(V1(phi) - V2(phi));
    if (gap > report.max_gap) {
      report.max_gap = gap;
      report.argmax = phi;
    }
    if (gap > cfg.tol) ++report.over_tol;
  };
  for_each_lattice_act(cfg.states, cfg.lattice_radius, cfg.lattice_step,
                       [&](const UtilityAct& phi) {
                         probe(phi);
                         ++report.lattice_acts;
                       });
  Rng rng(cfg.seed);
  for (int i = 0; i < cfg.samples; ++i) {
    probe(random_act(rng, cfg.states, cfg.lo, cfg.hi));
    ++report.sampled_acts;
  }
  return report;
}

void for_each_lattice_act(Eigen::Index states, double radius, double step,
                          const std::function<void(const UtilityAct&)>& fn) {
  const int per_axis = 2 * static_cast<int>(std::floor(radius / step + 0.5)) + 1;
  UtilityAct phi = Eigen::VectorXd::Constant(states, -radius);
  std::vector<int> odo(states, 0);
  for (;;) {
    fn(phi);
    Eigen::Index j = 0;
    while (j < states) {
      if (++odo[j] < per_axis) {
        phi[j] = -radius + step * odo[j];
        break;
      }
      odo[j] = 0;
      phi[j] = -radius;
      ++j;
    }
    if (j == states) break;
  }
}

Belief random_belief(Rng& rng, Eigen::Index states) {
  Belief p(states);
  for (Eigen::Index i = 0; i < states; ++i) p[i] = rng.uniform(0.01, 1.0);
  p /= p.sum();
  return p;
}

UtilityAct random_act(Rng& rng, Eigen::Index states, double lo, double hi) {
  UtilityAct phi(states);
  for (Eigen::Index i = 0; i < states; ++i) phi[i] = rng.uniform(lo, hi);
  return phi;
}

CredalSet random_credal_set(Rng& rng, Eigen::Index states, Eigen::Index max_points) {
  const Eigen::Index n_pts = 1 + static_cast<Eigen::Index>(rng.below(max_points));
  CredalSet set;
  set.points.resize(n_pts, states);
  for (Eigen::Index i = 0; i < n_pts; ++i)
    set.points.row(i) = random_belief(rng, states).transpose();
  return set;
}

BeliefCollection random_collection(Rng& rng, Eigen::Index states) {
  BeliefCollection coll;
  const int n_sets = 1 + static_cast<int>(rng.below(4));
  for (int s = 0; s < n_sets; ++s)
    coll.sets.push_back(random_credal_set(rng, states, 4));
  return coll;
}

BeliefCollection random_collection(const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  return random_collection(rng, cfg.states);
}

BeliefCollection random_overlapping_collection(Rng& rng, Eigen::Index states) {
  const Belief shared = random_belief(rng, states);
  BeliefCollection coll;
  const int n_sets = 1 + static_cast<int>(rng.below(4));
  for (int s = 0; s < n_sets; ++s) {
    CredalSet set = random_credal_set(rng, states, 3);
    CredalSet with_shared;
    with_shared.points.resize(set.size() + 1, states);
    with_shared.points.topRows(set.size()) = set.points;
    with_shared.points.row(set.size()) = shared.transpose();
    coll.sets.push_back(std::move(with_shared));
  }
  return coll;
}

GridCapacity random_capacity(Rng& rng, const BeliefGrid& grid) {
  GridCapacity v;
  v.grid = grid;
  const std::size_t n_masks = std::size_t{1} << grid.size();
  v.values.assign(n_masks, 0.0);
  for (std::size_t m = 1; m + 1 < n_masks; ++m) {
    double floor = rng.uniform();
    for (Eigen::Index b = 0; b < grid.size(); ++b)
      if (m & (std::size_t{1} << b)) floor = std::max(floor, v.values[m & ~(std::size_t{1} << b)]);
    v.values[m] = floor;
  }
  v.values[n_masks - 1] = 1.0;
  return validate_capacity(v);
}

GridCapacity random_capacity(const SampleConfig& cfg, const BeliefGrid& grid) {
  Rng rng(cfg.seed);
  return random_capacity(rng, grid);
}

BeliefGrid random_grid(Rng& rng, Eigen::Index states, Eigen::Index points) {
  detail::require(points >= 2 && points <= kMaxGridPoints, "grid size out of range");
  BeliefGrid g;
  g.points.resize(points, states);
  // corners first, then interior draws; retry collisions
  for (Eigen::Index i = 0; i < points; ++i) {
    if (i < states && i < points) {
      g.points.row(i).setZero();
      g.points(i, i % states) = 1.0;
    } else {
      g.points.row(i) = random_belief(rng, states).transpose();
    }
  }
  return validate_grid(g);
}

CostCollection random_cost_collection(Rng& rng, Eigen::Index states) {
  CostCollection coll;
  coll.grid = random_grid(rng, states, std::min<Eigen::Index>(states + 3, 8));
  const int n_costs = 1 + static_cast<int>(rng.below(3));
  for (int c = 0; c < n_costs; ++c) {
    CostFunction cost;
    cost.costs.resize(coll.grid.size());
    for (Eigen::Index i = 0; i < coll.grid.size(); ++i)
      cost.costs[i] = rng.uniform(0.0, 2.0);
    coll.costs.push_back(std::move(cost));
  }
  return normalize_cost_collection(std::move(coll));
}

CostCollection random_cost_collection(const SampleConfig& cfg) {
  Rng rng(cfg.seed);
  return random_cost_collection(rng, cfg.states);
}

GCollection random_g_collection(Rng& rng, Eigen::Index states) {
  GCollection coll;
  coll.grid = random_grid(rng, states, std::min<Eigen::Index>(states + 3, 8));
  const int n_funcs = 1 + static_cast<int>(rng.below(3));
  for (int f = 0; f < n_funcs; ++f) {
    GFunction g;
    // slope-1 section, sometimes with redundant interior breakpoints to
    // exercise the piecewise evaluation
    const double intercept = (f == 0) ? 0.0 : -rng.uniform(0.0, 1.0);
    if (rng.below(2) == 0) {
      g.h = PiecewiseLinear{{0.0, 1.0}, {intercept, 1.0 + intercept}};
    } else {
      g.h = PiecewiseLinear{{-2.0, 0.0, 2.0},
                            {-2.0 + intercept, intercept, 2.0 + intercept}};
    }
    g.costs.resize(coll.grid.size());
    for (Eigen::Index i = 0; i < coll.grid.size(); ++i)
      g.costs[i] = rng.uniform(0.0, 2.0);
    // min cost 0: the anchor (intercept 0) attains the identity envelope,
    // the others sit weakly below it
    g.costs.array() -= g.costs.minCoeff();
    coll.functions.push_back(std::move(g));
  }
  return validate_g_collection(coll);
}

GenAlphaModel random_gen_alpha_model(Rng& rng, Eigen::Index states, bool compliant,
                                     double deficit) {
  GenAlphaModel m;
  do {
    m.reference = random_credal_set(rng, states, 4);
  } while (m.reference.size() < 2 ||
           has_duplicate_points(m.reference, 1e-6));
  m.weights.fallback = compliant ? 0.5 + 0.5 * rng.uniform() : 0.6;

  const int planted = compliant ? 4 : 1;
  int attempts = 0;
  for (int i = 0; i < planted && attempts < 64; ++attempts) {
    UtilityAct probe = random_act(rng, states, -3.0, 3.0);
    if (is_crisp(m.reference, probe, 1e-6)) continue;
    const Signature sig = signature(m.reference, probe);
    const Signature dual = dual_signature(sig);
    if (m.weights.assigned.count(sig) || m.weights.assigned.count(dual)) continue;
    if (compliant) {
      const double a = rng.uniform();
      const double b = rng.uniform(1.0 - a, 1.0);
      m.weights.set(sig, a);
      m.weights.set(dual, b);
    } else {
      const double cap = (1.0 - deficit) / 2.0;
      m.weights.set(sig, rng.uniform(0.0, cap));
      m.weights.set(dual, rng.uniform(0.0, cap));
    }
    ++i;
  }
  return m;
}

UtilityAct random_crisp_act(Rng& rng, const CredalSet& P, double lo, double hi) {
  // crisp acts = constants + null space of extreme-point differences
  const Eigen::Index n = P.dim();
  Eigen::MatrixXd diffs(P.size() - 1, n);
  for (Eigen::Index i = 1; i < P.size(); ++i)
    diffs.row(i - 1) = P.points.row(i) - P.points.row(0);
  UtilityAct phi = Eigen::VectorXd::Constant(n, rng.uniform(lo, hi));
  if (diffs.rows() > 0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(diffs);
    const Eigen::MatrixXd kernel = lu.kernel();
    for (Eigen::Index c = 0; c < kernel.cols(); ++c)
      phi += rng.uniform(-1.0, 1.0) * kernel.col(c);
  }
  return phi;
}

Functional make_functional(std::string name,
                           std::function<double(const UtilityAct&)> f) {
  return Functional{std::move(name), std::move(f)};
}

}  // namespace ambit
