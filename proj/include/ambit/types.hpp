#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ambit {

/// A utility act: one utility level per state (units: utils).
using UtilityAct = Eigen::VectorXd;

/// A belief: a probability vector over states.
using Belief = Eigen::VectorXd;

/// Default tolerance for all value comparisons.
inline constexpr double kDefaultTol = 1e-9;

/// Thrown when an operation's preconditions are violated (dimension
/// mismatch, weights out of range, malformed model data, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidInput(what);
}

}  // namespace detail

/// Deterministic random source. std::mt19937_64 with explicit bit-to-double
/// conversion so streams are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    // splitmix64; passes through the full 64-bit state deterministically.
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), multiples of 2^-53.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Independent substream derived from this stream's seed.
  Rng split(std::uint64_t salt) const {
    return Rng(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace ambit
