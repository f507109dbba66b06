#include "coredp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "coredp/errors.hpp"
#include "coredp/ledp_kcore.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coredp {

namespace {

int worker_count(std::uint32_t requested) {
#ifdef _OPENMP
  return requested == 0 ? omp_get_max_threads() : static_cast<int>(requested);
#else
  (void)requested;
  return 1;
#endif
}

double ln_n(VertexId n) { return std::log(static_cast<double>(n)); }

Schedule schedule_for(Algorithm algorithm, const ExperimentSpec& spec,
                      VertexId n) {
  const bool geometric = algorithm == Algorithm::kDpKcoreGeometric;
  const double derived = spec.step_const * ln_n(n) / spec.epsilon;
  const double start = spec.schedule_start.value_or(derived);
  if (geometric) return Schedule::geometric(start, 1.0 + spec.eta);
  const double step = spec.schedule_step.value_or(start);
  return Schedule::additive(start, step);
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kDpKcoreAdditive: return "dp-kcore-additive";
    case Algorithm::kDpKcoreGeometric: return "dp-kcore-geometric";
    case Algorithm::kLedpKcore: return "ledp-kcore";
    case Algorithm::kDensest: return "densest";
    case Algorithm::kOrdering: return "ordering";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  for (Algorithm a :
       {Algorithm::kOracle, Algorithm::kDpKcoreAdditive,
        Algorithm::kDpKcoreGeometric, Algorithm::kLedpKcore,
        Algorithm::kDensest, Algorithm::kOrdering}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

void validate(const ExperimentSpec& spec) {
  std::string bad;
  auto flag = [&bad](const std::string& field) {
    bad += bad.empty() ? field : ", " + field;
  };
  if (spec.graph_path.empty() == spec.generator.empty()) {
    flag("graph (exactly one of --graph/--gen required)");
  }
  if (!(spec.epsilon > 0.0)) flag("epsilon (must be > 0)");
  if (!(spec.eta > 0.0)) flag("eta (must be > 0)");
  if (!(spec.step_const > 0.0)) flag("step-const (must be > 0)");
  if (!(spec.c_prime > 0.0)) flag("cprime (must be > 0)");
  if (spec.trials < 1) flag("trials (must be >= 1)");
  if (spec.schedule_start && !(*spec.schedule_start > 0.0)) {
    flag("schedule-start (must be > 0)");
  }
  if (spec.schedule_step && !(*spec.schedule_step > 0.0)) {
    flag("schedule-step (must be > 0)");
  }
  if (!bad.empty()) throw ValidationError("invalid spec: " + bad);
}

namespace {

struct OracleContext {
  CoreLabels labels;
  std::uint32_t degeneracy = 0;
  std::optional<double> dstar;
};

void fill_label_metrics(TrialRecord& rec, const CoreLabels& truth,
                        double phi) {
  rec.max_abs_error = 0.0;
  rec.max_below_true = 0.0;
  rec.max_above_phi = 0.0;
  for (std::size_t v = 0; v < truth.size(); ++v) {
    const double k = static_cast<double>(truth[v]);
    const double khat = rec.labels[v];
    rec.max_abs_error = std::max(rec.max_abs_error, std::abs(khat - k));
    rec.max_below_true = std::max(rec.max_below_true, k - khat);
    rec.max_above_phi = std::max(rec.max_above_phi, khat - phi * k);
  }
}

TrialRecord execute_trial(const ExperimentSpec& spec, const Graph& g,
                          const OracleContext& oracle_ctx, double phi,
                          double zeta, std::uint64_t trial) {
  TrialRecord rec;
  rec.trial = trial;
  rec.seed = spec.seed + trial;
  NoiseOracle oracle(rec.seed, spec.zero_noise);
  const auto t0 = std::chrono::steady_clock::now();

  switch (spec.algorithm) {
    case Algorithm::kOracle: {
      rec.labels.assign(oracle_ctx.labels.begin(), oracle_ctx.labels.end());
      break;
    }
    case Algorithm::kDpKcoreAdditive:
    case Algorithm::kDpKcoreGeometric: {
      const Schedule sched = schedule_for(spec.algorithm, spec, g.n());
      rec.labels =
          dp_core_numbers(g, spec.epsilon, sched, oracle, spec.engine).labels;
      break;
    }
    case Algorithm::kLedpKcore: {
      rec.labels =
          ledp_core_numbers(g, {spec.epsilon, spec.eta}, oracle).labels;
      break;
    }
    case Algorithm::kDensest: {
      const Schedule sched =
          schedule_for(Algorithm::kDpKcoreAdditive, spec, g.n());
      VertexSubset s = dp_densest_subgraph(g, spec.epsilon, spec.c_prime,
                                           oracle, sched, spec.engine);
      rec.subset = s.members();
      const ExactDensity d = density(g, s);
      rec.density_num = static_cast<double>(d.edges);
      rec.density_den = static_cast<double>(d.vertices);
      break;
    }
    case Algorithm::kOrdering: {
      const Schedule sched =
          schedule_for(Algorithm::kDpKcoreAdditive, spec, g.n());
      OrderingResult r = dp_low_outdegree_ordering(g, spec.epsilon, sched,
                                                   oracle, spec.engine);
      rec.order = std::move(r.order);
      rec.realized_max_outdegree = r.realized_max_outdegree;
      break;
    }
  }

  switch (spec.algorithm) {
    case Algorithm::kOracle:
      rec.meets_bound = true;
      break;
    case Algorithm::kDpKcoreAdditive:
    case Algorithm::kDpKcoreGeometric:
    case Algorithm::kLedpKcore:
      fill_label_metrics(rec, oracle_ctx.labels, phi);
      rec.meets_bound =
          rec.max_below_true <= zeta && rec.max_above_phi <= zeta;
      break;
    case Algorithm::kDensest: {
      const double dens = rec.density_num / rec.density_den;
      const double target =
          oracle_ctx.dstar ? *oracle_ctx.dstar
                           : static_cast<double>(oracle_ctx.degeneracy);
      const double floor =
          target / 2.0 - spec.c_prime * ln_n(g.n()) / spec.epsilon;
      rec.meets_bound = dens >= floor;
      break;
    }
    case Algorithm::kOrdering:
      rec.meets_bound =
          rec.realized_max_outdegree <= oracle_ctx.degeneracy + zeta;
      break;
  }

  const auto t1 = std::chrono::steady_clock::now();
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

}  // namespace

RunReport run(const ExperimentSpec& spec) {
  validate(spec);

  RunReport report;
  report.spec = spec;
  Graph g;
  if (!spec.graph_path.empty()) {
    LoadedGraph loaded = load_graph(spec.graph_path);
    g = std::move(loaded.graph);
    if (loaded.remapped) report.vertex_ids = std::move(loaded.original_ids);
  } else {
    g = generate(parse_gen_spec(spec.generator));
  }
  report.n = g.n();
  report.m = g.m();

  OracleContext oracle_ctx;
  oracle_ctx.labels = exact_core_numbers(g);
  oracle_ctx.degeneracy = degeneracy(oracle_ctx.labels);
  if (g.n() >= 1 && g.n() <= 20 && spec.algorithm == Algorithm::kDensest) {
    oracle_ctx.dstar = brute_force_densest(g).density.value();
  }
  report.oracle_labels = oracle_ctx.labels;
  report.graph_degeneracy = oracle_ctx.degeneracy;
  report.dstar = oracle_ctx.dstar;

  double phi = 1.0;
  double zeta = 0.0;
  switch (spec.algorithm) {
    case Algorithm::kOracle:
      break;
    case Algorithm::kDpKcoreAdditive:
      phi = 1.0;
      zeta = 2.0 * spec.step_const * ln_n(g.n()) / spec.epsilon;
      break;
    case Algorithm::kDpKcoreGeometric:
      phi = 1.0 + spec.eta;
      zeta = spec.step_const * ln_n(g.n()) / spec.epsilon;
      break;
    case Algorithm::kLedpKcore:
      phi = 2.0 + spec.eta;
      zeta = 300.0 * ln_n(g.n()) / spec.epsilon;
      break;
    case Algorithm::kDensest:
      phi = 2.0;
      zeta = spec.c_prime * ln_n(g.n()) / spec.epsilon;
      break;
    case Algorithm::kOrdering:
      phi = 1.0;
      zeta = 2.0 * spec.step_const * ln_n(g.n()) / spec.epsilon;
      break;
  }
  report.phi = phi;
  report.zeta = zeta;

  report.trials.resize(spec.trials);
  const std::int64_t trials = static_cast<std::int64_t>(spec.trials);
  const int workers = worker_count(spec.workers);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers) \
    if (trials > 1)
#endif
  for (std::int64_t i = 0; i < trials; ++i) {
    report.trials[i] = execute_trial(spec, g, oracle_ctx, phi, zeta,
                                     static_cast<std::uint64_t>(i));
  }
  (void)workers;

  report.trials_meeting_bound = 0;
  for (const TrialRecord& rec : report.trials) {
    report.trials_meeting_bound += rec.meets_bound ? 1 : 0;
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval at 95% (z = 1.96).
Interval wilson(std::uint64_t successes, std::uint64_t trials) {
  constexpr double z = 1.959963984540054;
  const double nd = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nd;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nd;
  const double center = (p + z2 / (2.0 * nd)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nd + z2 / (4.0 * nd * nd)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double safe_log_ratio(double a, double b) {
  constexpr double kCap = 1e6;  // stands in for "unbounded"
  if (a <= 0.0 && b <= 0.0) return 0.0;
  if (b <= 0.0) return kCap;
  if (a <= 0.0) return -kCap;
  return std::min(kCap, std::max(-kCap, std::log(a / b)));
}

std::int64_t audit_event_value(const AuditSpec& spec, const Graph& g,
                               double bucket_width, NoiseOracle& oracle) {
  switch (spec.algorithm) {
    case Algorithm::kDpKcoreAdditive:
    case Algorithm::kDpKcoreGeometric: {
      ExperimentSpec run_spec;
      run_spec.epsilon = spec.epsilon;
      run_spec.eta = spec.eta;
      run_spec.step_const = spec.step_const;
      run_spec.schedule_start = spec.schedule_start;
      run_spec.schedule_step = spec.schedule_step;
      const Schedule sched = schedule_for(spec.algorithm, run_spec, g.n());
      const DpCoreResult r =
          dp_core_numbers(g, spec.epsilon, sched, oracle, spec.engine);
      return static_cast<std::int64_t>(
          std::floor(r.labels[spec.event_vertex] / bucket_width));
    }
    case Algorithm::kLedpKcore: {
      const LedpResult r =
          ledp_core_numbers(g, {spec.epsilon, spec.eta}, oracle);
      return static_cast<std::int64_t>(
          std::floor(r.labels[spec.event_vertex] / bucket_width));
    }
    case Algorithm::kDensest: {
      ExperimentSpec run_spec;
      run_spec.epsilon = spec.epsilon;
      run_spec.eta = spec.eta;
      run_spec.step_const = spec.step_const;
      run_spec.schedule_start = spec.schedule_start;
      run_spec.schedule_step = spec.schedule_step;
      const Schedule sched =
          schedule_for(Algorithm::kDpKcoreAdditive, run_spec, g.n());
      VertexSubset s = dp_densest_subgraph(g, spec.epsilon, spec.c_prime,
                                           oracle, sched, spec.engine);
      return s.contains(spec.event_vertex) ? 1 : 0;
    }
    default:
      return 0;  // rejected during validation
  }
}

using BucketCounts = std::map<std::int64_t, std::uint64_t>;

BucketCounts audit_side(const AuditSpec& spec, const Graph& g,
                        double bucket_width, std::uint64_t seed_offset) {
  const std::int64_t trials = static_cast<std::int64_t>(spec.trials);
  const int workers = worker_count(spec.workers);
  BucketCounts total;
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
#endif
  {
    BucketCounts local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (std::int64_t i = 0; i < trials; ++i) {
      NoiseOracle oracle(spec.seed + seed_offset + 2 * i, false);
      ++local[audit_event_value(spec, g, bucket_width, oracle)];
    }
#ifdef _OPENMP
#pragma omp critical
#endif
    for (const auto& [bucket, count] : local) total[bucket] += count;
  }
  (void)workers;
  return total;
}

}  // namespace

AuditReport privacy_audit(const Graph& g_a, const Graph& g_b,
                          const AuditSpec& spec) {
  if (!are_edge_neighbors(g_a, g_b)) {
    throw ValidationError("privacy_audit: graphs are not edge-neighboring");
  }
  if (spec.algorithm == Algorithm::kOracle ||
      spec.algorithm == Algorithm::kOrdering) {
    throw ValidationError("privacy_audit: no built-in event for algorithm " +
                          to_string(spec.algorithm));
  }
  if (!(spec.epsilon > 0.0)) {
    throw ValidationError("privacy_audit: epsilon must be > 0");
  }
  if (spec.event_vertex >= g_a.n()) {
    throw ValidationError("privacy_audit: event vertex out of range");
  }

  AuditReport report;
  report.spec = spec;
  double width = spec.bucket_width;
  if (width <= 0.0) {
    ExperimentSpec probe;
    probe.epsilon = spec.epsilon;
    probe.eta = spec.eta;
    probe.step_const = spec.step_const;
    probe.schedule_start = spec.schedule_start;
    probe.schedule_step = spec.schedule_step;
    width = spec.algorithm == Algorithm::kDpKcoreGeometric
                ? schedule_for(spec.algorithm, probe, g_a.n()).start
                : schedule_for(Algorithm::kDpKcoreAdditive, probe, g_a.n()).step;
  }
  report.bucket_width = width;
  report.event_name =
      spec.algorithm == Algorithm::kDensest
          ? "membership-bit(v=" + std::to_string(spec.event_vertex) + ")"
          : "label-bucket(v=" + std::to_string(spec.event_vertex) +
                ", width=" + std::to_string(width) + ")";
  report.inconclusive = spec.trials < 10000;

  const BucketCounts counts_a = audit_side(spec, g_a, width, /*offset=*/0);
  const BucketCounts counts_b = audit_side(spec, g_b, width, /*offset=*/1);

  BucketCounts all;
  for (const auto& kv : counts_a) all.emplace(kv.first, 0);
  for (const auto& kv : counts_b) all.emplace(kv.first, 0);
  const double n = static_cast<double>(spec.trials);
  for (const auto& [bucket, unused] : all) {
    AuditBucket row;
    row.bucket = bucket;
    auto ita = counts_a.find(bucket);
    auto itb = counts_b.find(bucket);
    row.count_a = ita == counts_a.end() ? 0 : ita->second;
    row.count_b = itb == counts_b.end() ? 0 : itb->second;
    const Interval wa = wilson(row.count_a, spec.trials);
    const Interval wb = wilson(row.count_b, spec.trials);
    row.log_ratio = safe_log_ratio(row.count_a / n, row.count_b / n);
    // Bounds on |log ratio|: 0 when the intervals overlap.
    row.log_ratio_ucb =
        std::max(safe_log_ratio(wa.hi, wb.lo), safe_log_ratio(wb.hi, wa.lo));
    row.log_ratio_lcb = std::max(
        0.0,
        std::max(safe_log_ratio(wa.lo, wb.hi), safe_log_ratio(wb.lo, wa.hi)));
    report.buckets.push_back(row);

    report.max_abs_log_ratio =
        std::max(report.max_abs_log_ratio, std::abs(row.log_ratio));
    report.max_log_ratio_ucb =
        std::max(report.max_log_ratio_ucb, row.log_ratio_ucb);
    report.max_log_ratio_lcb =
        std::max(report.max_log_ratio_lcb, row.log_ratio_lcb);
  }
  // Confidence-interval gating: a point estimate alone never flags.
  report.violation =
      !report.inconclusive && report.max_log_ratio_lcb > spec.epsilon;
  return report;
}

// ---------------------------------------------------------------------------

EquivalenceReport equivalence_test(const Graph& g,
                                   const EquivalenceSpec& spec) {
  if (g.n() > 64) {
    throw CapacityError("equivalence_test: capped at n <= 64, got n=" +
                        std::to_string(g.n()));
  }
  if (!(spec.epsilon > 0.0)) {
    throw ValidationError("equivalence_test: epsilon must be > 0");
  }
  if (spec.trials < 1) {
    throw ValidationError("equivalence_test: trials must be >= 1");
  }

  EquivalenceReport report;
  report.spec = spec;
  report.threshold = spec.threshold > 0.0
                         ? spec.threshold
                         : 60.0 * ln_n(g.n()) / spec.epsilon;

  // One offset vector shared by both engines across every trial.
  NoiseOracle base(spec.seed, spec.zero_noise);
  NoiseOracle offset_oracle = base.spawn(0xC0FFEE);
  const PeelConfig config = draw_peel_config(g, spec.epsilon, offset_oracle);
  const VertexSubset all(g, /*full=*/true);

  const std::int64_t trials = static_cast<std::int64_t>(spec.trials);
  const int workers = worker_count(spec.workers);
  using MaskCounts = std::unordered_map<std::uint64_t, std::uint64_t>;
  MaskCounts naive_counts, fast_counts;

  auto run_engine = [&](PeelEngine engine, std::uint64_t stream_base,
                        MaskCounts& out) {
#ifdef _OPENMP
#pragma omp parallel num_threads(workers)
#endif
    {
      MaskCounts local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
      for (std::int64_t i = 0; i < trials; ++i) {
        NoiseOracle oracle = base.spawn(stream_base + 2 * i);
        const PeelOutcome outcome =
            engine == PeelEngine::kNaive
                ? naive_peel(g, all, config, oracle, report.threshold)
                : fast_peel(g, all, config, oracle, report.threshold);
        std::uint64_t mask = 0;
        for (VertexId v : outcome.survivors.members()) mask |= 1ULL << v;
        ++local[mask];
      }
#ifdef _OPENMP
#pragma omp critical
#endif
      for (const auto& [mask, count] : local) out[mask] += count;
    }
  };
  run_engine(PeelEngine::kNaive, 1, naive_counts);
  run_engine(PeelEngine::kFast, 2, fast_counts);
  (void)workers;

  double tv = 0.0;
  const double n = static_cast<double>(spec.trials);
  for (const auto& [mask, count] : naive_counts) {
    auto it = fast_counts.find(mask);
    const double other = it == fast_counts.end() ? 0.0 : it->second;
    tv += std::abs(static_cast<double>(count) - other);
  }
  for (const auto& [mask, count] : fast_counts) {
    if (!naive_counts.contains(mask)) tv += static_cast<double>(count);
  }
  report.tv_distance = 0.5 * tv / n;
  report.distinct_sets_naive = naive_counts.size();
  report.distinct_sets_fast = fast_counts.size();
  return report;
}

}  // namespace coredp
