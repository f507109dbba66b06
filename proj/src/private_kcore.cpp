#include "coredp/private_kcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "coredp/errors.hpp"

namespace coredp {

namespace {

constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();

void validate_schedule(const Schedule& s) {
  if (!(s.start > 0.0)) throw InputError("schedule: start must be positive");
  if (s.kind == Schedule::Kind::kAdditive && !(s.step > 0.0)) {
    throw InputError("schedule: additive step must be positive");
  }
  if (s.kind == Schedule::Kind::kGeometric && !(s.ratio > 1.0)) {
    throw InputError("schedule: geometric ratio must exceed 1");
  }
}

// Removal probability of one round: Pr[deg + Lap(8/eps) <= k + offset].
// Zero-override makes the comparator exact, so q is the 0/1 indicator.
double removal_probability(double deg, double threshold, double query_scale,
                           bool zero_override) {
  const double margin = threshold - deg;
  if (zero_override) return margin >= 0.0 ? 1.0 : 0.0;
  return laplace_cdf(margin, query_scale);
}

// Shared peel state, persistent across the thresholds of one run so the
// per-threshold cost tracks the surviving set, not n.
struct PeelCore {
  const Graph* g = nullptr;
  std::vector<std::uint8_t> in;
  std::vector<std::uint32_t> deg;
  std::vector<VertexId> live;  // ascending; compacted at threshold starts
  std::uint64_t tick = 0;

  void init(const Graph& graph, const VertexSubset& active,
            std::uint64_t start_tick) {
    g = &graph;
    tick = start_tick;
    live = active.members();
    in.assign(graph.n(), 0);
    for (VertexId v : live) in[v] = 1;
    deg.assign(graph.n(), 0);
    for (VertexId v : live) {
      std::uint32_t d = 0;
      for (VertexId u : graph.neighbors(v)) d += in[u];
      deg[v] = d;
    }
  }

  void compact() {
    std::erase_if(live, [this](VertexId v) { return !in[v]; });
  }

  VertexSubset survivors() const {
    VertexSubset out(*g);
    for (VertexId v : live) {
      if (in[v]) out.insert(v);
    }
    return out;
  }
};

struct NaivePeeler : PeelCore {
  std::vector<VertexId> round_removed;

  // One threshold peeled to its fixed point; removed vertices are appended
  // to `out` in removal order (round by round, ascending id within).
  void peel_threshold(const PeelConfig& config, NoiseOracle& oracle, double k,
                      std::vector<VertexId>& out) {
    compact();
    const double scale = config.per_query_scale();
    while (true) {
      ++tick;
      round_removed.clear();
      // Decisions in a round share the degree snapshot of the round start.
      for (VertexId v : live) {
        const double nu = oracle.laplace(scale);
        if (deg[v] + nu <= k + config.vertex_offsets[v]) {
          round_removed.push_back(v);
        }
      }
      if (round_removed.empty()) break;
      for (VertexId v : round_removed) in[v] = 0;
      for (VertexId v : round_removed) {
        for (VertexId u : g->neighbors(v)) {
          if (in[u]) --deg[u];
        }
      }
      std::erase_if(live, [this](VertexId v) { return !in[v]; });
      out.insert(out.end(), round_removed.begin(), round_removed.end());
    }
  }
};

struct FastPeeler : PeelCore {
  std::vector<std::uint64_t> remove_time;
  std::vector<std::uint8_t> queued;
  std::unordered_map<std::uint64_t, std::vector<VertexId>> buckets;
  std::vector<VertexId> updated;
  std::vector<VertexId> removed_now;

  void init(const Graph& graph, const VertexSubset& active,
            std::uint64_t start_tick) {
    PeelCore::init(graph, active, start_tick);
    remove_time.assign(graph.n(), kNever);
    queued.assign(graph.n(), 0);
    buckets.clear();
  }

  void peel_threshold(const PeelConfig& config, NoiseOracle& oracle, double k,
                      std::vector<VertexId>& out) {
    compact();
    const double scale = config.per_query_scale();
    const bool zero = oracle.zero_override();
    std::uint64_t alive = live.size();
    updated = live;  // a new threshold invalidates every schedule
    while (true) {
      // Resample removal times where the threshold or a neighborhood
      // changed. Old bucket entries go stale and are skipped later.
      std::sort(updated.begin(), updated.end());
      for (VertexId v : updated) {
        queued[v] = 0;
        if (!in[v]) continue;
        const double q = removal_probability(
            deg[v], k + config.vertex_offsets[v], scale, zero);
        if (q <= 0.0) {
          remove_time[v] = kNever;
          continue;
        }
        const std::uint64_t gap = oracle.geometric(q);
        // Ticks only advance while removals keep landing, so times past
        // tick + alive cannot fire within this threshold.
        if (gap > alive) {
          remove_time[v] = kNever;
          continue;
        }
        remove_time[v] = tick + gap;
        buckets[remove_time[v]].push_back(v);
      }
      updated.clear();

      ++tick;
      removed_now.clear();
      if (auto it = buckets.find(tick); it != buckets.end()) {
        for (VertexId v : it->second) {
          if (in[v] && remove_time[v] == tick) removed_now.push_back(v);
        }
        buckets.erase(it);
      }
      if (removed_now.empty()) break;
      std::sort(removed_now.begin(), removed_now.end());
      // A resample can land on the vertex's stale slot, duplicating it.
      removed_now.erase(
          std::unique(removed_now.begin(), removed_now.end()),
          removed_now.end());
      for (VertexId v : removed_now) in[v] = 0;
      for (VertexId v : removed_now) {
        for (VertexId u : g->neighbors(v)) {
          if (in[u]) {
            --deg[u];
            if (!queued[u]) {
              queued[u] = 1;
              updated.push_back(u);
            }
          }
        }
      }
      alive -= removed_now.size();
      out.insert(out.end(), removed_now.begin(), removed_now.end());
    }
  }
};

}  // namespace

Schedule Schedule::additive(double start, double step) {
  Schedule s{Kind::kAdditive, start, step, 2.0};
  validate_schedule(s);
  return s;
}

Schedule Schedule::geometric(double start, double ratio) {
  Schedule s{Kind::kGeometric, start, 1.0, ratio};
  validate_schedule(s);
  return s;
}

Schedule default_schedule(VertexId n, double epsilon, Schedule::Kind kind,
                          double step_const, double eta) {
  if (n < 2) throw InputError("default_schedule: n must be >= 2");
  if (!(epsilon > 0.0)) throw InputError("default_schedule: epsilon > 0");
  if (!(step_const > 0.0)) throw InputError("default_schedule: step_const > 0");
  const double start = step_const * std::log(static_cast<double>(n)) / epsilon;
  if (kind == Schedule::Kind::kAdditive) return Schedule::additive(start, start);
  if (!(eta > 0.0)) throw InputError("default_schedule: eta > 0");
  return Schedule::geometric(start, 1.0 + eta);
}

PeelConfig draw_peel_config(const Graph& g, double epsilon,
                            NoiseOracle& oracle) {
  if (!(epsilon > 0.0)) throw InputError("peel: epsilon must be positive");
  PeelConfig config;
  config.epsilon = epsilon;
  config.vertex_offsets.reserve(g.n());
  for (VertexId v = 0; v < g.n(); ++v) {
    config.vertex_offsets.push_back(oracle.laplace(config.offset_scale()));
  }
  return config;
}

PeelOutcome naive_peel(const Graph& g, const VertexSubset& active,
                       const PeelConfig& config, NoiseOracle& oracle,
                       double k, std::uint64_t start_tick) {
  NaivePeeler peeler;
  peeler.init(g, active, start_tick);
  PeelOutcome out{VertexSubset(g), {}, 0};
  peeler.peel_threshold(config, oracle, k, out.removed);
  out.end_tick = peeler.tick;
  out.survivors = peeler.survivors();
  return out;
}

PeelOutcome fast_peel(const Graph& g, const VertexSubset& active,
                      const PeelConfig& config, NoiseOracle& oracle,
                      double k, std::uint64_t start_tick) {
  FastPeeler peeler;
  peeler.init(g, active, start_tick);
  PeelOutcome out{VertexSubset(g), {}, 0};
  peeler.peel_threshold(config, oracle, k, out.removed);
  out.end_tick = peeler.tick;
  out.survivors = peeler.survivors();
  return out;
}

namespace {

template <typename Peeler>
DpCoreResult run_decomposition(const Graph& g, const Schedule& schedule,
                               const PeelConfig& config, NoiseOracle& oracle) {
  DpCoreResult result;
  result.labels.assign(g.n(), 0.0);

  Peeler peeler;
  peeler.init(g, VertexSubset(g, /*full=*/true), 0);
  std::vector<VertexId> removed;
  double prev_k = 0.0;
  const double n = static_cast<double>(g.n());
  for (double k = schedule.start; k <= n; k = schedule.next(k)) {
    removed.clear();
    peeler.peel_threshold(config, oracle, k, removed);
    // A vertex removed at threshold k last survived the previous one.
    for (VertexId v : removed) result.labels[v] = prev_k;
    result.order.insert(result.order.end(), removed.begin(), removed.end());
    prev_k = k;
    peeler.compact();
    if (peeler.live.empty()) break;
  }
  // Survivors of the whole schedule keep the last label and close J.
  peeler.compact();
  for (VertexId v : peeler.live) {
    result.labels[v] = prev_k;
    result.order.push_back(v);
  }
  result.ticks = peeler.tick;
  return result;
}

}  // namespace

DpCoreResult dp_core_numbers(const Graph& g, double epsilon,
                             const Schedule& schedule, NoiseOracle& oracle,
                             PeelEngine engine) {
  validate_schedule(schedule);
  const PeelConfig config = draw_peel_config(g, epsilon, oracle);
  return engine == PeelEngine::kNaive
             ? run_decomposition<NaivePeeler>(g, schedule, config, oracle)
             : run_decomposition<FastPeeler>(g, schedule, config, oracle);
}

}  // namespace coredp
