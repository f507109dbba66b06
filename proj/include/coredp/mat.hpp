#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coredp/noise.hpp"

namespace coredp {

/// Configuration of a multidimensional AboveThreshold run: d public
/// thresholds answered under one privacy budget. `sensitivity` is the
/// l1-sensitivity of each whole query vector across edge-neighboring
/// inputs; the engine cannot check it, the caller owes it.
struct MatConfig {
  double epsilon = 1.0;
  double sensitivity = 1.0;
  std::vector<double> thresholds;

  std::size_t dims() const { return thresholds.size(); }
  double threshold_noise_scale() const { return 2.0 * sensitivity / epsilon; }
  double query_noise_scale() const { return 4.0 * sensitivity / epsilon; }
};

struct MatState {
  std::vector<double> noisy_thresholds;
  std::vector<std::uint8_t> halted;
  std::uint64_t queries_answered = 0;
};

enum class MatAnswer : std::uint8_t {
  kBelow,   // query stayed under the noisy threshold
  kAbove,   // crossed; this coordinate stops answering
  kHalted,  // coordinate crossed on an earlier query
};

/// Perturbs each threshold once with Lap(2*sensitivity/epsilon).
MatState mat_init(const MatConfig& config, NoiseOracle& oracle);

/// Answers one adaptive query vector. Each live coordinate j draws
/// Lap(4*sensitivity/epsilon) and reports kAbove (and halts) iff
/// f[j] + noise >= noisy threshold; halted coordinates consume no
/// randomness. f must have exactly d entries (UsageError).
std::vector<MatAnswer> mat_query(MatState& state, const MatConfig& config,
                                 NoiseOracle& oracle,
                                 std::span<const double> f);

}  // namespace coredp
