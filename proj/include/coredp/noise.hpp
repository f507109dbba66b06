#pragma once

#include <cstdint>
#include <random>

namespace coredp {

/// Seeded source of Laplace and geometric samples. All draws go through an
/// inverse-CDF transform of one mt19937_64 uniform stream, so a given seed
/// reproduces the same values on every platform.
///
/// In zero-override mode every Laplace draw is exactly 0 (and consumes no
/// generator state), turning the mechanisms built on top into deterministic
/// comparators; geometric draws still sample the real Geom(q) distribution
/// for whatever q the caller injects.
class NoiseOracle {
 public:
  explicit NoiseOracle(std::uint64_t seed, bool zero_override = false);

  /// Lap(scale) with mean 0. scale must be positive (UsageError).
  double laplace(double scale);

  /// Geom(q) on {1, 2, ...}: trials until first success. Requires
  /// 0 < q <= 1 (UsageError); q = 1 returns 1 without consuming randomness.
  /// Callers must map q = 0 to "never" themselves.
  std::uint64_t geometric(double q);

  /// Derived oracle with an independent stream, same mode. Deterministic in
  /// (seed, stream).
  NoiseOracle spawn(std::uint64_t stream) const;

  std::uint64_t draws_consumed() const { return draws_; }
  bool zero_override() const { return zero_; }
  std::uint64_t seed() const { return seed_; }

 private:
  double uniform_open();  // strictly inside (0, 1)

  std::mt19937_64 rng_;
  std::uint64_t seed_;
  std::uint64_t draws_ = 0;
  bool zero_;
};

/// Pr[Lap(scale) <= t]; scale must be positive (UsageError).
double laplace_cdf(double t, double scale);

}  // namespace coredp
