#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coredp/derived_apps.hpp"
#include "coredp/graph.hpp"
#include "coredp/kcore_oracle.hpp"
#include "coredp/private_kcore.hpp"

namespace coredp {

enum class Algorithm {
  kOracle,
  kDpKcoreAdditive,
  kDpKcoreGeometric,
  kLedpKcore,
  kDensest,
  kOrdering,
};

std::string to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct ExperimentSpec {
  Algorithm algorithm = Algorithm::kOracle;
  std::string graph_path;  // exactly one of graph_path / generator
  std::string generator;
  double epsilon = 1.0;
  double eta = 0.5;
  double step_const = 60.0;
  double c_prime = 120.0;
  // Explicit schedule override; when unset the stock schedule applies.
  std::optional<double> schedule_start;
  std::optional<double> schedule_step;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  PeelEngine engine = PeelEngine::kFast;
  bool zero_noise = false;
  std::uint32_t workers = 0;  // 0 = all available
  bool timings = false;
};

/// Throws ValidationError listing every bad field.
void validate(const ExperimentSpec& spec);

struct TrialRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::vector<double> labels;      // label algorithms
  std::vector<VertexId> subset;    // densest
  std::vector<VertexId> order;     // ordering
  // Error metrics against the exact oracle.
  double max_abs_error = 0.0;
  double max_below_true = 0.0;   // max over v of k(v) - khat(v)
  double max_above_phi = 0.0;    // max over v of khat(v) - phi * k(v)
  double density_num = 0.0;      // densest: |E_S|
  double density_den = 0.0;      // densest: |V_S|
  std::uint32_t realized_max_outdegree = 0;
  bool meets_bound = true;
  double wall_ms = 0.0;
};

struct RunReport {
  ExperimentSpec spec;
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::uint64_t> vertex_ids;  // only when the loader remapped
  CoreLabels oracle_labels;
  std::uint32_t graph_degeneracy = 0;
  std::optional<double> dstar;      // brute force, n <= 20 only
  double phi = 1.0;                 // multiplicative target of the algorithm
  double zeta = 0.0;                // additive target of the algorithm
  std::vector<TrialRecord> trials;
  std::uint64_t trials_meeting_bound = 0;
};

RunReport run(const ExperimentSpec& spec);

// ---------------------------------------------------------------------------
// Privacy audit: empirical check of the DP inequality on a neighboring pair.

enum class AuditEvent {
  kVertexLabelBucket,  // label of one vertex quantized to width buckets
  kSubsetMembership,   // densest: is the named vertex in S
};

struct AuditSpec {
  Algorithm algorithm = Algorithm::kDpKcoreAdditive;
  double epsilon = 1.0;
  double eta = 0.5;
  double step_const = 60.0;
  double c_prime = 120.0;
  std::optional<double> schedule_start;
  std::optional<double> schedule_step;
  AuditEvent event = AuditEvent::kVertexLabelBucket;
  VertexId event_vertex = 0;
  double bucket_width = 0.0;  // 0: use the schedule step
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  PeelEngine engine = PeelEngine::kNaive;
  std::uint32_t workers = 0;
};

struct AuditBucket {
  std::int64_t bucket = 0;
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  double log_ratio = 0.0;      // ln(p_a / p_b), point estimate
  double log_ratio_lcb = 0.0;  // Wilson-based lower bound on |log ratio|
  double log_ratio_ucb = 0.0;
};

struct AuditReport {
  AuditSpec spec;
  std::string event_name;
  double bucket_width = 0.0;
  std::vector<AuditBucket> buckets;
  double max_abs_log_ratio = 0.0;
  double max_log_ratio_ucb = 0.0;
  double max_log_ratio_lcb = 0.0;
  bool inconclusive = false;  // fewer than 10^4 trials
  bool violation = false;     // some bucket's lower bound exceeds epsilon
};

/// The two graphs must be edge-neighboring (ValidationError otherwise).
/// Never flags a violation from point estimates alone.
AuditReport privacy_audit(const Graph& g_a, const Graph& g_b,
                          const AuditSpec& spec);

// ---------------------------------------------------------------------------
// Engine equivalence: empirical TV distance between survivor-set
// distributions of the two peel engines under a shared offset vector.

struct EquivalenceSpec {
  double epsilon = 1.0;
  double threshold = 0.0;  // 0: 60 * ln(n) / epsilon
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  bool zero_noise = false;
  std::uint32_t workers = 0;
};

struct EquivalenceReport {
  EquivalenceSpec spec;
  double threshold = 0.0;
  double tv_distance = 0.0;
  std::uint64_t distinct_sets_naive = 0;
  std::uint64_t distinct_sets_fast = 0;
};

/// Requires n <= 64 so survivor sets pack into one word (CapacityError).
EquivalenceReport equivalence_test(const Graph& g, const EquivalenceSpec& spec);

}  // namespace coredp
