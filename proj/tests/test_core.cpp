#include <doctest.h>

#include "ambit/core.hpp"

using namespace ambit;

namespace {

Act random_act_matrix(Rng& rng, Eigen::Index states, Eigen::Index prizes) {
  Act f;
  f.weights.resize(states, prizes);
  for (Eigen::Index s = 0; s < states; ++s) {
    Eigen::VectorXd w(prizes);
    for (Eigen::Index p = 0; p < prizes; ++p) w[p] = rng.uniform(0.01, 1.0);
    f.weights.row(s) = (w / w.sum()).transpose();
  }
  return f;
}

// the Table 1 urn: prizes $0, $95, $100, $105, utility = dollar amounts
const UtilityFunction kUrnUtility{(Eigen::VectorXd(4) << 0, 95, 100, 105).finished()};

Act bet_I() {
  Act f;
  f.weights.resize(4, 4);
  f.weights << 0, 0, 1, 0,  // red: $100
      0, 0, 1, 0,           // green: $100
      1, 0, 0, 0,           // blue: $0
      1, 0, 0, 0;           // black: $0
  return f;
}

}  // namespace

TEST_CASE("utility act of the urn bets") {
  const UtilityAct phi = utility_act(bet_I(), kUrnUtility);
  CHECK(phi.size() == 4);
  CHECK(phi[0] == doctest::Approx(100.0));
  CHECK(phi[1] == doctest::Approx(100.0));
  CHECK(phi[2] == doctest::Approx(0.0));
  CHECK(phi[3] == doctest::Approx(0.0));
}

TEST_CASE("constant act maps to a constant vector") {
  const UtilityFunction u{(Eigen::VectorXd(2) << 7.0, 9.0).finished()};
  Act f;
  f.weights.resize(3, 2);
  f.weights << 1, 0, 1, 0, 1, 0;
  const UtilityAct phi = utility_act(f, u);
  for (int s = 0; s < 3; ++s) CHECK(phi[s] == doctest::Approx(7.0));
}

TEST_CASE("fair coin between utility 0 and 100") {
  const UtilityFunction u{(Eigen::VectorXd(2) << 0.0, 100.0).finished()};
  Act f;
  f.weights.resize(2, 2);
  f.weights << 0.5, 0.5, 0.5, 0.5;
  const UtilityAct phi = utility_act(f, u);
  CHECK(phi[0] == doctest::Approx(50.0));
  CHECK(phi[1] == doctest::Approx(50.0));
}

TEST_CASE("mixing utility acts") {
  const UtilityAct bets_I = (Eigen::VectorXd(4) << 100, 100, 0, 0).finished();
  const UtilityAct bets_II = (Eigen::VectorXd(4) << 0, 0, 100, 100).finished();
  const UtilityAct hedge = mix_utility_acts(bets_I, bets_II, 0.5);
  for (int s = 0; s < 4; ++s) CHECK(hedge[s] == doctest::Approx(50.0));

  const UtilityAct bets_III = (Eigen::VectorXd(4) << 105, 95, 0, 0).finished();
  const UtilityAct bets_IV = (Eigen::VectorXd(4) << 95, 105, 0, 0).finished();
  const UtilityAct partial = mix_utility_acts(bets_III, bets_IV, 0.5);
  CHECK(partial[0] == doctest::Approx(100.0));
  CHECK(partial[1] == doctest::Approx(100.0));
  CHECK(partial[2] == doctest::Approx(0.0));

  CHECK(mix_utility_acts(bets_III, bets_IV, 1.0) == bets_III);
}

TEST_CASE("constant_utility_act") {
  CHECK(constant_utility_act(0.5, 2) == (Eigen::VectorXd(2) << 0.5, 0.5).finished());
  CHECK(constant_utility_act(0.0, 4).isZero());
  CHECK(constant_utility_act(-3.0, 3) == Eigen::VectorXd::Constant(3, -3.0));
  CHECK_THROWS_AS(constant_utility_act(1.0, 1), InvalidInput);
}

TEST_CASE("input validation") {
  const UtilityFunction u{(Eigen::VectorXd(3) << 0, 1, 2).finished()};
  Act two_prizes;
  two_prizes.weights.resize(2, 2);
  two_prizes.weights << 1, 0, 0, 1;
  CHECK_THROWS_AS(utility_act(two_prizes, u), InvalidInput);

  const UtilityAct a = Eigen::VectorXd::Zero(2);
  const UtilityAct b = Eigen::VectorXd::Zero(3);
  CHECK_THROWS_AS(mix_utility_acts(a, b, 0.5), InvalidInput);
  CHECK_THROWS_AS(mix_utility_acts(a, a, 1.5), InvalidInput);
  CHECK_THROWS_AS(mix_utility_acts(a, a, -0.1), InvalidInput);

  Lottery bad{(Eigen::VectorXd(2) << 0.7, 0.2).finished()};
  CHECK_THROWS_AS(validate_lottery(bad), InvalidInput);
  UtilityFunction flat{Eigen::VectorXd::Constant(3, 1.0)};
  CHECK_THROWS_AS(validate_utility(flat), InvalidInput);
}

TEST_CASE("utility_act is affine in act mixtures") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    const Eigen::Index states = 2 + static_cast<Eigen::Index>(rng.below(3));
    const Eigen::Index prizes = 2 + static_cast<Eigen::Index>(rng.below(4));
    UtilityFunction u;
    u.values.resize(prizes);
    for (Eigen::Index p = 0; p < prizes; ++p) u.values[p] = rng.uniform(-10, 10);
    u.values[0] = u.values[1] + 1.0;  // keep nonconstant
    const Act f = random_act_matrix(rng, states, prizes);
    const Act g = random_act_matrix(rng, states, prizes);
    const double alpha = rng.uniform();
    const UtilityAct direct = utility_act(mix_acts(f, g, alpha), u);
    const UtilityAct mixed =
        mix_utility_acts(utility_act(f, u), utility_act(g, u), alpha);
    CHECK((direct - mixed).cwiseAbs().maxCoeff() <= 1e-12);
  }
}
