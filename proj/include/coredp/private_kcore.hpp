#pragma once

#include <cstdint>
#include <vector>

#include "coredp/graph.hpp"
#include "coredp/noise.hpp"

namespace coredp {

/// Threshold sequence for the private peel: starts at `start`, then either
/// adds `step` (additive) or multiplies by `ratio` (geometric) until the
/// threshold passes n.
struct Schedule {
  enum class Kind { kAdditive, kGeometric };

  Kind kind = Kind::kAdditive;
  double start = 1.0;
  double step = 1.0;   // additive
  double ratio = 2.0;  // geometric

  static Schedule additive(double start, double step);
  static Schedule geometric(double start, double ratio);

  double next(double k) const {
    return kind == Kind::kAdditive ? k + step : k * ratio;
  }
};

/// Stock schedules: additive start = step = step_const * ln(n) / epsilon;
/// geometric start = step_const * ln(n) / epsilon with ratio 1 + eta.
/// step_const defaults to 60 but is a tunable, not a magic constant.
Schedule default_schedule(VertexId n, double epsilon, Schedule::Kind kind,
                          double step_const = 60.0, double eta = 0.5);

/// Per-run noise state shared by every threshold: the per-vertex offsets
/// (drawn once, scale 4/epsilon) and the per-query scale 8/epsilon.
struct PeelConfig {
  double epsilon = 1.0;
  std::vector<double> vertex_offsets;

  double per_query_scale() const { return 8.0 / epsilon; }
  double offset_scale() const { return 4.0 / epsilon; }
};

/// Draws the offset vector from `oracle` (ascending vertex order).
PeelConfig draw_peel_config(const Graph& g, double epsilon,
                            NoiseOracle& oracle);

struct PeelOutcome {
  VertexSubset survivors;
  std::vector<VertexId> removed;  // removal order: tick ascending, id within
  std::uint64_t end_tick = 0;
};

/// One fixed-threshold peel to its fixed point, round by round: every
/// surviving vertex draws fresh Lap(8/epsilon) and is removed when
/// induced degree + noise <= k + offset; stops when a round removes
/// nothing. Work is Theta(rounds * |active|).
PeelOutcome naive_peel(const Graph& g, const VertexSubset& active,
                       const PeelConfig& config, NoiseOracle& oracle,
                       double k, std::uint64_t start_tick = 0);

/// Same output distribution as naive_peel, via per-vertex geometric removal
/// times resampled only when a neighbor is removed. The removal probability
/// is q = Pr[Lap(8/eps) <= k + offset(v) - deg(v)]; under zero-override it
/// collapses to the 0/1 comparator, with q = 0 meaning "never". Near-linear
/// total work.
PeelOutcome fast_peel(const Graph& g, const VertexSubset& active,
                      const PeelConfig& config, NoiseOracle& oracle,
                      double k, std::uint64_t start_tick = 0);

enum class PeelEngine { kNaive, kFast };

struct DpCoreResult {
  std::vector<double> labels;     // approximate core number per vertex
  std::vector<VertexId> order;    // full removal order J (survivors last)
  std::uint64_t ticks = 0;
};

/// The epsilon-edge-DP decomposition: offsets drawn once, thresholds walked
/// per the schedule, survivors of threshold k labelled k. Labels never
/// decrease within a run.
DpCoreResult dp_core_numbers(const Graph& g, double epsilon,
                             const Schedule& schedule, NoiseOracle& oracle,
                             PeelEngine engine = PeelEngine::kFast);

}  // namespace coredp
