#include <doctest.h>

#include "ambit/axiom_lab.hpp"
#include "ambit/bewley.hpp"
#include "ambit/core.hpp"

using namespace ambit;

namespace {

UtilityAct act2(double a, double b) { return (Eigen::VectorXd(2) << a, b).finished(); }
UtilityAct act3(double a, double b, double c) {
  return (Eigen::VectorXd(3) << a, b, c).finished();
}

BewleyModel disjoint_singletons() {
  return BewleyModel{collection_of({singleton_set(act2(1, 0)), singleton_set(act2(0, 1))})};
}

BewleyModel simplex_model() { return BewleyModel{collection_of({full_simplex(2)})}; }

}  // namespace

TEST_CASE("bewley verdicts") {
  const BewleyModel m = disjoint_singletons();
  const UtilityAct phi = act2(1, -1);
  const UtilityAct zero = act2(0, 0);
  // both directions justified: the relation is intransitivity-capable
  CHECK(bewley_prefers(m, phi, zero).weak);
  CHECK(bewley_prefers(m, zero, phi).weak);
  CHECK_FALSE(bewley_prefers(m, phi, zero).strict);

  const UtilityAct high = act2(3, 2);
  const UtilityAct low = act2(2, 1);
  const PreferenceVerdict dominant = bewley_prefers(m, high, low);
  CHECK(dominant.weak);
  CHECK(dominant.strict);
  CHECK(dominant.robust_strict);

  const PreferenceVerdict self = bewley_prefers(m, phi, phi);
  CHECK(self.weak);
  CHECK_FALSE(self.strict);
}

TEST_CASE("robustly better") {
  const BewleyModel m = simplex_model();
  CHECK(robustly_better(m, act2(2, 2), act2(1, 1)));
  CHECK_FALSE(robustly_better(m, act2(1, -1), act2(0, 0)));
  // margin exactly zero: killed by perturbation
  CHECK_FALSE(robustly_better(m, act2(1, 0), act2(0, 0)));
}

TEST_CASE("robust strict implies strict implies weak") {
  Rng rng(5);
  for (int it = 0; it < 500; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const BewleyModel m{random_collection(rng, n)};
    const UtilityAct phi = random_act(rng, n, -3, 3);
    const UtilityAct psi = random_act(rng, n, -3, 3);
    const PreferenceVerdict v = bewley_prefers(m, phi, psi);
    if (v.robust_strict) CHECK(v.strict);
    if (v.strict) CHECK(v.weak);
    CHECK(v.robust_strict == robustly_better(m, phi, psi));
  }
}

TEST_CASE("perturbation soundness of the margin criterion") {
  Rng rng(7);
  int robust_pairs = 0;
  for (int it = 0; it < 4000 && robust_pairs < 200; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(2));
    const BewleyModel m{random_collection(rng, n)};
    const UtilityAct phi = random_act(rng, n, -3, 3);
    const UtilityAct psi = random_act(rng, n, -3, 3);
    if (!robustly_better(m, phi, psi)) continue;
    ++robust_pairs;
    const double eps = 10.0 * kDefaultTol;
    for (int p = 0; p < 100; ++p) {
      const UtilityAct h = random_act(rng, n, -3, 3);
      const UtilityAct hp = random_act(rng, n, -3, 3);
      const UtilityAct left = (1 - eps) * phi + eps * h;
      const UtilityAct right = (1 - eps) * psi + eps * hp;
      CHECK(bewley_prefers(m, left, right).strict);
    }
  }
  CHECK(robust_pairs == 200);

  // a margin-zero pair is reversed by some perturbation
  const BewleyModel m = simplex_model();
  const UtilityAct phi = act2(1, 0);
  const UtilityAct zero = act2(0, 0);
  CHECK(bewley_prefers(m, phi, zero).strict);
  CHECK_FALSE(robustly_better(m, phi, zero));
  const double eps = 10.0 * kDefaultTol;
  const UtilityAct pushed = (1 - eps) * zero + eps * act2(1, 1);
  CHECK_FALSE(bewley_prefers(m, (1 - eps) * phi, pushed).strict);
}

TEST_CASE("rationalized value is the cautious dual-self value") {
  CHECK(rationalized_value(disjoint_singletons(), act2(1, 0)) == doctest::Approx(0.0));
  CHECK(rationalized_value(simplex_model(), Eigen::VectorXd::Constant(2, 1.25)) ==
        doctest::Approx(1.25));
  CHECK(rationalized_value(simplex_model(), act2(3, 1)) == doctest::Approx(1.0));
}

TEST_CASE("support values") {
  CHECK(support_value(simplex_model().collection, act2(1, 0)) == doctest::Approx(0.0));
  CHECK(support_value(disjoint_singletons().collection, act2(1, 0)) ==
        doctest::Approx(1.0));
  Rng rng(9);
  const BeliefCollection coll = random_collection(rng, 3);
  CHECK(support_value(coll, Eigen::VectorXd::Constant(3, -0.75)) ==
        doctest::Approx(-0.75));
}

TEST_CASE("half-space closure tests") {
  Rng rng(11);
  const BeliefCollection base = random_collection(rng, 2);
  BeliefCollection with_duplicate = base;
  with_duplicate.sets.push_back(base.sets.front());
  const auto dirs = closure_direction_set(base, with_duplicate, 512, 1);
  CHECK(halfspace_closure_equal(base, with_duplicate, dirs));

  const BeliefCollection simplex = collection_of({full_simplex(2)});
  const BeliefCollection singletons = disjoint_singletons().collection;
  CHECK_FALSE(halfspace_closure_equal(simplex, singletons,
                                      closure_direction_set(simplex, singletons, 512, 1)));

  // adding a subset of a member moves the support at phi = (1,0)
  CredalSet sub;
  sub.points.resize(2, 2);
  sub.points << 0.7, 0.3, 1.0, 0.0;
  BeliefCollection augmented = simplex;
  augmented.sets.push_back(sub);
  CHECK(support_value(simplex, act2(1, 0)) == doctest::Approx(0.0));
  CHECK(support_value(augmented, act2(1, 0)) == doctest::Approx(0.7));
  CHECK_FALSE(halfspace_closure_equal(simplex, augmented,
                                      closure_direction_set(simplex, augmented, 512, 1)));
}

TEST_CASE("equal support values on a dense sweep give equal rationalized values") {
  Rng rng(13);
  for (int it = 0; it < 20; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(2));
    const BeliefCollection base = random_collection(rng, n);
    BeliefCollection augmented = base;
    // the convex hull of a union never raises the max-of-min
    CredalSet hull;
    const CredalSet& a = base.sets.front();
    const CredalSet& b = base.sets.back();
    hull.points.resize(a.size() + b.size(), n);
    hull.points.topRows(a.size()) = a.points;
    hull.points.bottomRows(b.size()) = b.points;
    augmented.sets.push_back(hull);

    const auto dirs = closure_direction_set(base, augmented, 512, it);
    REQUIRE(halfspace_closure_equal(base, augmented, dirs));
    for_each_lattice_act(n, 2.0, 1.0, [&](const UtilityAct& phi) {
      CHECK(rationalized_value(BewleyModel{base}, phi) ==
            doctest::Approx(rationalized_value(BewleyModel{augmented}, phi))
                .epsilon(1e-12));
    });
  }
}

TEST_CASE("consistency axioms hold for the rationalized value") {
  Rng rng(17);
  for (int it = 0; it < 10; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const BewleyModel m{random_collection(rng, n)};
    const auto report = check_consistency_axioms(
        m, [&](const UtilityAct& phi) { return rationalized_value(m, phi); }, 2000,
        1000 + it);
    CHECK(report.passed());
    CHECK(report.b1_checked > 0);
    CHECK(report.b2_checked > 0);
  }
}

TEST_CASE("priority to certainty fails for the pure dual-self value") {
  const BewleyModel m = disjoint_singletons();
  const auto report = check_consistency_axioms(
      m, [&](const UtilityAct& phi) { return dual_self_value(m.collection, phi); },
      20000, 99);
  CHECK_FALSE(report.b2_violations.empty());
}

TEST_CASE("union-maxmin passes the consistency axioms only when it matches") {
  // over a singleton collection the union maxmin IS the rationalized value
  Rng rng(18);
  const BeliefCollection single = collection_of({random_credal_set(rng, 2, 4)});
  const auto union_maxmin = [](const BeliefCollection& coll) {
    CredalSet merged;
    Eigen::Index rows = 0;
    for (const CredalSet& s : coll.sets) rows += s.size();
    merged.points.resize(rows, coll.dim());
    Eigen::Index at = 0;
    for (const CredalSet& s : coll.sets) {
      merged.points.middleRows(at, s.size()) = s.points;
      at += s.size();
    }
    return merged;
  };
  const CredalSet merged_single = union_maxmin(single);
  const auto single_report = check_consistency_axioms(
      BewleyModel{single},
      [&](const UtilityAct& phi) { return maxmin_value(merged_single, phi); }, 5000, 21);
  CHECK(single_report.passed());

  // a collection whose union maxmin sits strictly below the rationalized
  // value somewhere must trip the robust-consistency axiom
  BeliefCollection two;
  CredalSet left, right;
  left.points.resize(2, 2);
  left.points << 0.9, 0.1, 0.5, 0.5;
  right.points.resize(2, 2);
  right.points << 0.5, 0.5, 0.1, 0.9;
  two.sets = {left, right};
  const CredalSet merged_two = union_maxmin(two);
  bool differs = false;
  for_each_lattice_act(2, 3.0, 1.0, [&](const UtilityAct& phi) {
    if (std::abs(maxmin_value(merged_two, phi) -
                 rationalized_value(BewleyModel{two}, phi)) > 1e-9)
      differs = true;
  });
  REQUIRE(differs);
  const auto two_report = check_consistency_axioms(
      BewleyModel{two},
      [&](const UtilityAct& phi) { return maxmin_value(merged_two, phi); }, 20000, 22);
  CHECK_FALSE(two_report.b1_violations.empty());
}

TEST_CASE("quasi-transitivity of the strict part on Bewley and justifiable models") {
  Rng rng(19);
  // singleton collection (Bewley) and all-singleton sets (justifiable)
  for (int kind = 0; kind < 2; ++kind) {
    for (int it = 0; it < 40; ++it) {
      const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(2));
      BeliefCollection coll;
      if (kind == 0) {
        coll.sets.push_back(random_credal_set(rng, n, 4));
      } else {
        const int n_sets = 2 + static_cast<int>(rng.below(3));
        for (int s = 0; s < n_sets; ++s)
          coll.sets.push_back(singleton_set(random_belief(rng, n)));
      }
      const BewleyModel m{coll};
      for (int t = 0; t < 200; ++t) {
        const UtilityAct f = random_act(rng, n, -3, 3);
        const UtilityAct g = random_act(rng, n, -3, 3);
        const UtilityAct h = random_act(rng, n, -3, 3);
        if (bewley_prefers(m, f, g).strict && bewley_prefers(m, g, h).strict)
          CHECK(bewley_prefers(m, f, h).strict);
      }
    }
  }
}

TEST_CASE("strict part is not quasi-transitive for mixed collections") {
  // {{e1}, conv{e2,e3}}: strict(f,g) and strict(g,h) hold but h stays weakly
  // justified over f through the second set, blocking strict(f,h)
  BeliefCollection coll;
  coll.sets.push_back(singleton_set(act3(1, 0, 0)));
  CredalSet rest;
  rest.points.resize(2, 3);
  rest.points << 0, 1, 0, 0, 0, 1;
  coll.sets.push_back(rest);
  const BewleyModel m{coll};

  const UtilityAct f = act3(2, -4, -4);
  const UtilityAct g = act3(1, -5, 1);
  const UtilityAct h = act3(0, 0, 0);
  CHECK(bewley_prefers(m, f, g).strict);
  CHECK(bewley_prefers(m, g, h).strict);
  CHECK_FALSE(bewley_prefers(m, f, h).strict);
  CHECK(bewley_prefers(m, h, f).weak);
}

TEST_CASE("reflexivity, completeness on constants, unambiguous transitivity, independence") {
  Rng rng(23);
  for (int it = 0; it < 300; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(2));
    const BewleyModel m{random_collection(rng, n)};
    const UtilityAct phi = random_act(rng, n, -3, 3);
    const UtilityAct psi = random_act(rng, n, -3, 3);
    const UtilityAct chi = random_act(rng, n, -3, 3);

    CHECK(bewley_prefers(m, phi, phi).weak);

    const UtilityAct x = Eigen::VectorXd::Constant(n, rng.uniform(-3, 3));
    const UtilityAct y = Eigen::VectorXd::Constant(n, rng.uniform(-3, 3));
    CHECK((bewley_prefers(m, x, y).weak || bewley_prefers(m, y, x).weak));

    // phi dominating psi inherits psi's justifications
    UtilityAct dominating = psi;
    for (Eigen::Index i = 0; i < n; ++i) dominating[i] += rng.uniform(0.0, 1.0);
    if (bewley_prefers(m, psi, chi).weak) CHECK(bewley_prefers(m, dominating, chi).weak);

    // independence is exact for the max-min difference form
    const double alpha = rng.uniform(0.1, 0.9);
    const bool plain = bewley_prefers(m, phi, psi).weak;
    const bool mixed = bewley_prefers(m, mix_utility_acts(phi, chi, alpha),
                                      mix_utility_acts(psi, chi, alpha))
                           .weak;
    if (plain != mixed) {
      // only a tolerance-boundary artifact can separate them
      const double margin = support_value(m.collection, phi - psi);
      CHECK(std::abs(margin * alpha) <= 2.0 * kDefaultTol);
    }
  }
}
