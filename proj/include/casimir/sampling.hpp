#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "casimir/multi_poly.hpp"

namespace casimir {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// kDefaultSeed, or the value of CASIMIR_SEED when set and parseable.
std::uint64_t default_seed();

/// Random rationals p/q with p in [-99, 99] and q in [1, 9].
class PointSampler {
public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  BigRational next();
  BigRational next_nonzero();
  /// Integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  Assignment point(const std::vector<VarId>& vars);

  std::mt19937_64& engine() noexcept { return rng_; }

private:
  std::mt19937_64 rng_;
};

/// Random polynomial with up to `terms` terms in `vars`, each exponent at most
/// max_exp, small integer coefficients.
MultiPoly random_poly(PointSampler& s, const std::vector<VarId>& vars, int terms, int max_exp = 2);

}  // namespace casimir
