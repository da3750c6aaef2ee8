#include <doctest.h>

#include "ambit/axiom_lab.hpp"
#include "ambit/bewley.hpp"

using namespace ambit;

namespace {

UtilityAct act2(double a, double b) { return (Eigen::VectorXd(2) << a, b).finished(); }

Functional maxmin_simplex2() {
  return make_functional("maxmin", [](const UtilityAct& phi) {
    return maxmin_value(full_simplex(2), phi);
  });
}

Functional cautious_fn(const BeliefCollection& coll) {
  return make_functional("cautious", [coll](const UtilityAct& phi) {
    return cautious_dual_self_value(coll, phi);
  });
}

}  // namespace

TEST_CASE("indifference constant by bisection") {
  const Functional maxmin = maxmin_simplex2();
  const auto k = indifference_constant(maxmin, act2(1, 0), 0.5);
  REQUIRE(k.has_value());
  CHECK(*k == doctest::Approx(0.5).epsilon(1e-8));
  const UtilityAct partner = hedge_partner(act2(1, 0), 0.5, *k);
  CHECK(partner[0] == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(partner[1] == doctest::Approx(1.0).epsilon(1e-8));

  const Belief fair = (Eigen::VectorXd(2) << 0.5, 0.5).finished();
  const Functional eu =
      make_functional("eu", [fair](const UtilityAct& phi) { return fair.dot(phi); });
  CHECK(*indifference_constant(eu, act2(1, 0), 0.5) == doctest::Approx(0.5).epsilon(1e-8));

  for (double alpha : {0.25, 0.5, 0.75})
    CHECK(*indifference_constant(maxmin, Eigen::VectorXd::Constant(2, 1.5), alpha) ==
          doctest::Approx(1.5).epsilon(1e-8));
}

TEST_CASE("weak uncertainty aversion checker, positive and negative controls") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 2000;
  cfg.seed = 71;

  Rng rng(71);
  for (int it = 0; it < 5; ++it) {
    const BeliefCollection coll =
        random_collection(rng, rng.below(2) == 0 ? 2 : 3);
    cfg.states = coll.dim();
    CHECK(check_weak_uncertainty_aversion(cautious_fn(coll), cfg).passed());
  }

  cfg.states = 2;
  const BeliefCollection disjoint =
      collection_of({singleton_set(act2(1, 0)), singleton_set(act2(0, 1))});
  const Functional optimism = make_functional("dual-self", [disjoint](const UtilityAct& phi) {
    return dual_self_value(disjoint, phi);
  });
  const AxiomReport bad = check_weak_uncertainty_aversion(optimism, cfg);
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.violations.empty());
  const AxiomViolation& w = bad.violations.front();
  CHECK(w.level < w.v_phi - 1e-8);  // the hedge level sits strictly below V(phi)

  for (double weight : {0.7, 0.3}) {
    const Functional alpha_fn =
        make_functional("alpha-maxmin", [weight](const UtilityAct& phi) {
          return alpha_maxmin_value(full_simplex(2), weight, phi);
        });
    const AxiomReport report = check_weak_uncertainty_aversion(alpha_fn, cfg);
    CHECK(report.passed() == (weight >= 0.5));
  }
}

TEST_CASE("simple diversification agrees with weak uncertainty aversion for dual-self") {
  Rng rng(73);
  int fails_seen = 0;
  for (int it = 0; it < 30; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const BeliefCollection coll =
        it % 2 == 0 ? random_collection(rng, n) : random_overlapping_collection(rng, n);
    const Functional fn = make_functional("dual-self", [coll](const UtilityAct& phi) {
      return dual_self_value(coll, phi);
    });
    SampleConfig cfg;
    cfg.states = n;
    cfg.samples = 1500;
    cfg.seed = 900 + it;
    const bool wua = check_weak_uncertainty_aversion(fn, cfg).passed();
    const bool sd = check_simple_diversification(fn, cfg).passed();
    CHECK(wua == sd);
    if (!wua) ++fails_seen;
  }
  CHECK(fails_seen > 0);  // the sweep must exercise both verdicts
}

TEST_CASE("full uncertainty aversion: maxmin passes, a cautious model fails") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 1500;
  cfg.seed = 77;
  CHECK(check_uncertainty_aversion(maxmin_simplex2(), cfg).passed());

  const Belief p = (Eigen::VectorXd(2) << 0.3, 0.7).finished();
  const Functional eu =
      make_functional("eu", [p](const UtilityAct& phi) { return p.dot(phi); });
  CHECK(check_uncertainty_aversion(eu, cfg).passed());

  // cautious models satisfy the weak axiom but not the full one; violations
  // require at least three states (with two, both game values are piecewise
  // linear with a single kink, hence concave along every line)
  Rng rng(79);
  cfg.states = 3;
  cfg.samples = 3000;
  bool violation_found = false;
  for (int it = 0; it < 10 && !violation_found; ++it) {
    const BeliefCollection coll = random_collection(rng, 3);
    cfg.seed = 800 + it;
    const AxiomReport report = check_uncertainty_aversion(cautious_fn(coll), cfg);
    violation_found = !report.passed();
    CHECK(check_weak_uncertainty_aversion(cautious_fn(coll), cfg).passed());
  }
  CHECK(violation_found);
}

TEST_CASE("invariant biseparable checker") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 800;
  cfg.seed = 81;

  Rng rng(81);
  const BeliefCollection coll = random_collection(rng, 2);
  const Functional optimism = make_functional("dual-self", [coll](const UtilityAct& phi) {
    return dual_self_value(coll, phi);
  });
  CHECK(check_invariant_biseparable(optimism, cfg).passed());

  // nonzero costs break positive homogeneity
  CostCollection costs;
  costs.grid.points.resize(3, 2);
  costs.grid.points << 0, 1, 0.5, 0.5, 1, 0;
  costs.costs.push_back(CostFunction{(Eigen::VectorXd(3) << 1, 0, 1).finished()});
  costs = validate_cost_collection(costs);
  const Functional variational =
      make_functional("variational", [costs](const UtilityAct& phi) {
        return variational_dual_self_value(costs, phi);
      });
  const AxiomReport broken = check_invariant_biseparable(variational, cfg);
  CHECK_FALSE(broken.passed());
  bool saw_homogeneity = false;
  for (const AxiomViolation& v : broken.violations)
    saw_homogeneity = saw_homogeneity || v.note == "homogeneity";
  CHECK(saw_homogeneity);

  const BeliefGrid grid = random_grid(rng, 2, 4);
  const GridCapacity v = random_capacity(rng, grid);
  const Functional cautious_choquet =
      make_functional("cautious-choquet", [v](const UtilityAct& phi) {
        return cautious_choquet_value(v, phi);
      });
  CHECK(check_invariant_biseparable(cautious_choquet, cfg).passed());
}

TEST_CASE("weak certainty independence checker") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 1500;
  cfg.seed = 83;

  Rng rng(83);
  const CostCollection costs = random_cost_collection(rng, 2);
  const Functional variational =
      make_functional("variational-cautious", [costs](const UtilityAct& phi) {
        return variational_cautious_value(costs, phi);
      });
  CHECK(check_weak_certainty_independence(variational, cfg).passed());

  CHECK(check_weak_certainty_independence(maxmin_simplex2(), cfg).passed());

  // a strictly convex aggregator with belief-dependent offsets fails: the
  // binding grid point switches with the stake and the comparison flips
  BeliefGrid grid;
  grid.points.resize(2, 2);
  grid.points << 1, 0, 0, 1;
  const GFunction convex{PiecewiseLinear{{-8.0, 0.0, 8.0}, {-8.0, 0.0, 24.0}},
                         (Eigen::VectorXd(2) << 0.0, 4.0).finished()};
  const Functional rational = make_functional("rational-convex", [=](const UtilityAct& phi) {
    const KappaProfile kappa = induced_kappa(grid, phi);
    double inner = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < kappa.size(); ++i)
      inner = std::min(inner, convex(kappa[i], i));
    return inner;
  });
  CHECK_FALSE(check_weak_certainty_independence(rational, cfg).passed());
}

TEST_CASE("risk independence checker") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 800;
  cfg.seed = 87;

  CHECK(check_risk_independence(maxmin_simplex2(), cfg).passed());

  Rng rng(87);
  const GCollection gs = random_g_collection(rng, 2);
  const Functional rational = make_functional("rational-cautious", [gs](const UtilityAct& phi) {
    return rational_cautious_value(gs, phi);
  });
  CHECK(check_risk_independence(rational, cfg).passed());

  const Functional squared = make_functional("squared-constants", [](const UtilityAct& phi) {
    const double mean = phi.mean();
    return mean * mean;
  });
  CHECK_FALSE(check_risk_independence(squared, cfg).passed());
}

TEST_CASE("monotonicity checker and the adversarial weight witness") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 800;
  cfg.seed = 91;
  CHECK(check_monotonicity(maxmin_simplex2(), cfg).passed());

  Rng rng(91);
  const BeliefCollection coll = random_collection(rng, 2);
  CHECK(check_monotonicity(cautious_fn(coll), cfg).passed());

  // weights that flip between the bottom and the top of the scenario order
  // break monotonicity (the model's known caveat)
  GenAlphaModel adversarial;
  adversarial.reference = full_simplex(3);
  Signature straight, swapped;
  straight.ranks = {0, 1, 2};
  swapped.ranks = {0, 2, 1};
  adversarial.weights.set(straight, 1.0);
  adversarial.weights.set(swapped, 0.0);
  const Functional gen = make_functional("gen-alpha", [adversarial](const UtilityAct& phi) {
    return generalized_alpha_value(adversarial, phi);
  });
  SampleConfig cfg3;
  cfg3.states = 3;
  cfg3.samples = 20000;
  cfg3.seed = 93;
  CHECK_FALSE(check_monotonicity(gen, cfg3).passed());
}

TEST_CASE("brute force equivalence") {
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 500;
  cfg.seed = 95;

  const Functional self = maxmin_simplex2();
  const EquivReport same = brute_force_equiv(self, self, cfg);
  CHECK(same.max_gap == 0.0);
  CHECK(same.lattice_acts == 49);

  // a square-of-mass capacity satisfies the superadditivity bound, so the
  // cautious integral coincides with the plain one
  Rng rng(95);
  const BeliefGrid grid = random_grid(rng, 2, 4);
  GridCapacity power;
  power.grid = grid;
  power.values.assign(16, 0.0);
  Eigen::VectorXd prob(4);
  for (int i = 0; i < 4; ++i) prob[i] = rng.uniform(0.1, 1.0);
  prob /= prob.sum();
  for (std::uint32_t m = 0; m < 16; ++m) {
    double mass = 0.0;
    for (int b = 0; b < 4; ++b)
      if (m & (1u << b)) mass += prob[b];
    power.values[m] = mass * mass;
  }
  power.values[15] = 1.0;
  power = validate_capacity(power);
  const Functional plain = make_functional("choquet", [power](const UtilityAct& phi) {
    return choquet_integral(power, induced_kappa(power.grid, phi));
  });
  const Functional cautious = make_functional("cautious-choquet", [power](const UtilityAct& phi) {
    return cautious_choquet_value(power, phi);
  });
  const EquivReport equal = brute_force_equiv(plain, cautious, cfg);
  CHECK(equal.max_gap <= 1e-9);
}

TEST_CASE("generators are deterministic and structurally valid") {
  // fixed-seed reproducibility of the documented instance
  Rng a(42), b(42);
  const BeliefCollection first = random_collection(a, 2);
  const BeliefCollection second = random_collection(b, 2);
  REQUIRE(first.size() == second.size());
  for (Eigen::Index s = 0; s < first.size(); ++s)
    CHECK(first.sets[s].points == second.sets[s].points);
  CHECK_NOTHROW(validate_collection(first));

  Rng rng(97);
  const BeliefGrid grid = random_grid(rng, 2, 4);
  for (int it = 0; it < 1000; ++it) {
    const GridCapacity v = random_capacity(rng, grid);
    CHECK_NOTHROW(validate_capacity(v));  // monotone by construction
  }

  for (int it = 0; it < 200; ++it) {
    const CostCollection costs = random_cost_collection(rng, 2 + rng.below(3));
    double max_min = -std::numeric_limits<double>::infinity();
    for (const CostFunction& c : costs.costs)
      max_min = std::max(max_min, c.costs.minCoeff());
    CHECK(max_min == 0.0);
  }
}

TEST_CASE("axiom reports are deterministic under a fixed seed") {
  const BeliefCollection disjoint =
      collection_of({singleton_set(act2(1, 0)), singleton_set(act2(0, 1))});
  const Functional fn = make_functional("dual-self", [disjoint](const UtilityAct& phi) {
    return dual_self_value(disjoint, phi);
  });
  SampleConfig cfg;
  cfg.states = 2;
  cfg.samples = 1000;
  cfg.seed = 99;
  const AxiomReport r1 = check_weak_uncertainty_aversion(fn, cfg);
  const AxiomReport r2 = check_weak_uncertainty_aversion(fn, cfg);
  REQUIRE(r1.violations.size() == r2.violations.size());
  CHECK(r1.samples_tested == r2.samples_tested);
  for (std::size_t i = 0; i < r1.violations.size(); ++i) {
    CHECK(r1.violations[i].sample_index == r2.violations[i].sample_index);
    CHECK(r1.violations[i].phi == r2.violations[i].phi);
    CHECK(r1.violations[i].level == r2.violations[i].level);
  }
}

TEST_CASE("certainty equivalent by bisection matches the closed form") {
  Rng rng(101);
  for (int it = 0; it < 20; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const BeliefCollection coll = random_collection(rng, n);
    const Functional fn = cautious_fn(coll);
    for (int k = 0; k < 20; ++k) {
      const UtilityAct phi = random_act(rng, n, -4, 4);
      const auto ce = certainty_equivalent(fn, phi);
      REQUIRE(ce.has_value());
      CHECK(*ce == doctest::Approx(cautious_dual_self_value(coll, phi)).epsilon(1e-7));
    }
  }
}

TEST_CASE("crisp act sampler produces crisp acts") {
  Rng rng(103);
  for (int it = 0; it < 200; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const CredalSet P = random_credal_set(rng, n, 4);
    CHECK(is_crisp(P, random_crisp_act(rng, P, -3, 3)));
  }
}
