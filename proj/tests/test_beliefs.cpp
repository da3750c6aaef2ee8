#include <doctest.h>

#include "ambit/axiom_lab.hpp"
#include "ambit/beliefs.hpp"

using namespace ambit;

namespace {

CredalSet two_point_set() {
  CredalSet P;
  P.points.resize(2, 2);
  P.points << 0.7, 0.3, 1.0, 0.0;
  return P;
}

}  // namespace

TEST_CASE("min and max expectation over extreme points") {
  const UtilityAct e1 = (Eigen::VectorXd(2) << 1, 0).finished();

  CHECK(min_expectation(full_simplex(2), e1) == doctest::Approx(0.0));
  CHECK(max_expectation(full_simplex(2), e1) == doctest::Approx(1.0));

  const CredalSet single = singleton_set((Eigen::VectorXd(2) << 0.3, 0.7).finished());
  const UtilityAct ten = (Eigen::VectorXd(2) << 10, 0).finished();
  CHECK(min_expectation(single, ten) == doctest::Approx(3.0));
  CHECK(max_expectation(single, ten) == doctest::Approx(3.0));

  CHECK(min_expectation(two_point_set(), e1) == doctest::Approx(0.7));
  CHECK(max_expectation(two_point_set(), e1) == doctest::Approx(1.0));
}

TEST_CASE("validate_collection clamps and rejects") {
  BeliefCollection coll;
  CredalSet P;
  P.points.resize(1, 2);
  P.points << 0.5, 0.5 + 1e-13;
  coll.sets.push_back(P);
  const BeliefCollection cleaned = validate_collection(coll);
  CHECK(cleaned.sets[0].points.row(0).sum() == doctest::Approx(1.0).epsilon(1e-15));

  CredalSet bad;
  bad.points.resize(1, 2);
  bad.points << 0.7, 0.2;
  BeliefCollection bad_coll;
  bad_coll.sets.push_back(bad);
  CHECK_THROWS_AS(validate_collection(bad_coll), InvalidInput);

  BeliefCollection with_empty;
  with_empty.sets.push_back(CredalSet{});
  CHECK_THROWS_AS(validate_collection(with_empty), InvalidInput);
  CHECK_THROWS_AS(validate_collection(BeliefCollection{}), InvalidInput);
}

TEST_CASE("duplicate extreme points are flagged, not rejected") {
  CredalSet P;
  P.points.resize(2, 2);
  P.points << 0.5, 0.5, 0.5, 0.5;
  CHECK(has_duplicate_points(P));
  CHECK_NOTHROW(validate_credal_set(P));
  CHECK_FALSE(has_duplicate_points(two_point_set()));
}

TEST_CASE("expectation bounds: linearity, duality, monotonicity") {
  Rng rng(11);
  for (int it = 0; it < 300; ++it) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.below(3));
    const CredalSet P = random_credal_set(rng, n, 4);
    const UtilityAct phi = random_act(rng, n, -5, 5);

    // positive scaling plus constant shift
    const double a = rng.uniform(0.0, 3.0);
    const double k = rng.uniform(-2.0, 2.0);
    const UtilityAct scaled = a * phi + Eigen::VectorXd::Constant(n, k);
    CHECK(min_expectation(P, scaled) ==
          doctest::Approx(a * min_expectation(P, phi) + k).epsilon(1e-12));

    // min(-phi) == -max(phi), exactly
    CHECK(min_expectation(P, -phi) == -max_expectation(P, phi));

    // dominated act never valued higher
    UtilityAct lower = phi;
    for (Eigen::Index i = 0; i < n; ++i) lower[i] -= rng.uniform(0.0, 1.0);
    CHECK(min_expectation(P, lower) <= min_expectation(P, phi) + 1e-12);
  }
}
