#include "coredp/noise.hpp"

#include <cmath>
#include <cstdint>

#include "coredp/errors.hpp"

namespace coredp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

NoiseOracle::NoiseOracle(std::uint64_t seed, bool zero_override)
    : rng_(seed), seed_(seed), zero_(zero_override) {}

double NoiseOracle::uniform_open() {
  // 53 bits, shifted off the lattice so 0 and 1 are unreachable.
  return (static_cast<double>(rng_() >> 11) + 0.5) *
         (1.0 / 9007199254740992.0);
}

double NoiseOracle::laplace(double scale) {
  if (!(scale > 0.0)) {
    throw UsageError("laplace: scale must be positive");
  }
  ++draws_;
  if (zero_) return 0.0;
  const double u = uniform_open();
  return u < 0.5 ? scale * std::log(2.0 * u)
                 : -scale * std::log(2.0 * (1.0 - u));
}

std::uint64_t NoiseOracle::geometric(double q) {
  if (!(q > 0.0) || q > 1.0) {
    throw UsageError("geometric: q must be in (0, 1]");
  }
  ++draws_;
  if (q == 1.0) return 1;
  const double u = uniform_open();
  const double trials = std::ceil(std::log1p(-u) / std::log1p(-q));
  if (!(trials >= 1.0)) return 1;
  // Beyond any horizon a peel can reach; avoids overflow in the cast.
  if (trials > 1e18) return static_cast<std::uint64_t>(1e18);
  return static_cast<std::uint64_t>(trials);
}

NoiseOracle NoiseOracle::spawn(std::uint64_t stream) const {
  return NoiseOracle(splitmix64(seed_ ^ splitmix64(stream + 1)), zero_);
}

double laplace_cdf(double t, double scale) {
  if (!(scale > 0.0)) {
    throw UsageError("laplace_cdf: scale must be positive");
  }
  return t >= 0.0 ? 1.0 - 0.5 * std::exp(-t / scale)
                  : 0.5 * std::exp(t / scale);
}

}  // namespace coredp
