#include "coredp/mat.hpp"

#include "coredp/errors.hpp"

namespace coredp {

MatState mat_init(const MatConfig& config, NoiseOracle& oracle) {
  if (!(config.epsilon > 0.0)) {
    throw InputError("mat: epsilon must be positive");
  }
  if (!(config.sensitivity > 0.0)) {
    throw InputError("mat: sensitivity must be positive");
  }
  MatState state;
  state.noisy_thresholds.reserve(config.dims());
  for (double t : config.thresholds) {
    state.noisy_thresholds.push_back(
        t + oracle.laplace(config.threshold_noise_scale()));
  }
  state.halted.assign(config.dims(), 0);
  return state;
}

std::vector<MatAnswer> mat_query(MatState& state, const MatConfig& config,
                                 NoiseOracle& oracle,
                                 std::span<const double> f) {
  if (f.size() != config.dims()) {
    throw UsageError("mat_query: expected " + std::to_string(config.dims()) +
                     " coordinates, got " + std::to_string(f.size()));
  }
  std::vector<MatAnswer> answers(config.dims(), MatAnswer::kHalted);
  for (std::size_t j = 0; j < config.dims(); ++j) {
    if (state.halted[j]) continue;
    const double nu = oracle.laplace(config.query_noise_scale());
    if (f[j] + nu >= state.noisy_thresholds[j]) {
      answers[j] = MatAnswer::kAbove;
      state.halted[j] = 1;
    } else {
      answers[j] = MatAnswer::kBelow;
    }
  }
  ++state.queries_answered;
  return answers;
}

}  // namespace coredp
