#include "coredp/report.hpp"

#include <sstream>

#include <json.hpp>

namespace coredp {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kProgram = "coredp 0.1.0";

Json environment_stamp() {
  // Deterministic for a given binary; no timestamps or hostnames, so
  // identical specs reproduce byte-identical reports.
  Json env;
  env["program"] = kProgram;
  env["compiler"] = __VERSION__;
#ifdef _OPENMP
  env["openmp"] = _OPENMP;
#else
  env["openmp"] = 0;
#endif
  return env;
}

Json spec_to_json(const ExperimentSpec& spec) {
  Json j;
  j["algorithm"] = to_string(spec.algorithm);
  if (!spec.graph_path.empty()) j["graph"] = spec.graph_path;
  if (!spec.generator.empty()) j["generator"] = spec.generator;
  j["epsilon"] = spec.epsilon;
  j["eta"] = spec.eta;
  j["step_const"] = spec.step_const;
  j["c_prime"] = spec.c_prime;
  if (spec.schedule_start) j["schedule_start"] = *spec.schedule_start;
  if (spec.schedule_step) j["schedule_step"] = *spec.schedule_step;
  j["trials"] = spec.trials;
  j["seed"] = spec.seed;
  j["engine"] = spec.engine == PeelEngine::kNaive ? "naive" : "fast";
  j["zero_noise"] = spec.zero_noise;
  return j;
}

std::string csv_num(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::string report_to_json(const RunReport& report) {
  Json j;
  j["spec"] = spec_to_json(report.spec);
  j["environment"] = environment_stamp();
  Json graph;
  graph["n"] = report.n;
  graph["m"] = report.m;
  if (!report.vertex_ids.empty()) graph["vertex_ids"] = report.vertex_ids;
  j["graph"] = graph;
  Json oracle;
  oracle["core_numbers"] = report.oracle_labels;
  oracle["degeneracy"] = report.graph_degeneracy;
  if (report.dstar) oracle["dstar"] = *report.dstar;
  j["oracle"] = oracle;
  Json bounds;
  bounds["phi"] = report.phi;
  bounds["zeta"] = report.zeta;
  j["bounds"] = bounds;

  Json trials = Json::array();
  for (const TrialRecord& rec : report.trials) {
    Json t;
    t["trial"] = rec.trial;
    t["seed"] = rec.seed;
    switch (report.spec.algorithm) {
      case Algorithm::kOracle:
      case Algorithm::kDpKcoreAdditive:
      case Algorithm::kDpKcoreGeometric:
      case Algorithm::kLedpKcore:
        t["labels"] = rec.labels;
        t["max_abs_error"] = rec.max_abs_error;
        t["max_below_true"] = rec.max_below_true;
        t["max_above_phi"] = rec.max_above_phi;
        break;
      case Algorithm::kDensest:
        t["subset"] = rec.subset;
        t["density_num"] = rec.density_num;
        t["density_den"] = rec.density_den;
        break;
      case Algorithm::kOrdering:
        t["order"] = rec.order;
        t["realized_max_outdegree"] = rec.realized_max_outdegree;
        break;
    }
    t["meets_bound"] = rec.meets_bound;
    if (report.spec.timings) t["wall_ms"] = rec.wall_ms;
    trials.push_back(std::move(t));
  }
  j["trials"] = trials;

  Json agg;
  agg["trials_meeting_bound"] = report.trials_meeting_bound;
  if (!report.trials.empty()) {
    double worst = 0.0;
    double sum = 0.0;
    for (const TrialRecord& rec : report.trials) {
      double metric = 0.0;
      switch (report.spec.algorithm) {
        case Algorithm::kDensest:
          metric = rec.density_num / rec.density_den;
          break;
        case Algorithm::kOrdering:
          metric = rec.realized_max_outdegree;
          break;
        default:
          metric = rec.max_abs_error;
          break;
      }
      worst = rec.trial == 0 ? metric
              : report.spec.algorithm == Algorithm::kDensest
                  ? std::min(worst, metric)
                  : std::max(worst, metric);
      sum += metric;
    }
    const char* name = report.spec.algorithm == Algorithm::kDensest
                           ? "density"
                           : report.spec.algorithm == Algorithm::kOrdering
                               ? "realized_max_outdegree"
                               : "max_abs_error";
    agg[std::string(name) + "_mean"] = sum / report.trials.size();
    agg[std::string(name) +
        (report.spec.algorithm == Algorithm::kDensest ? "_min" : "_max")] =
        worst;
  }
  j["aggregate"] = agg;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& report) {
  std::ostringstream out;
  const Algorithm a = report.spec.algorithm;
  out << "trial,seed";
  if (a == Algorithm::kDensest) {
    out << ",density_num,density_den,density";
  } else if (a == Algorithm::kOrdering) {
    out << ",realized_max_outdegree";
  } else {
    out << ",max_abs_error,max_below_true,max_above_phi";
  }
  out << ",meets_bound";
  if (report.spec.timings) out << ",wall_ms";
  out << "\n";
  for (const TrialRecord& rec : report.trials) {
    out << rec.trial << "," << rec.seed;
    if (a == Algorithm::kDensest) {
      out << "," << csv_num(rec.density_num) << "," << csv_num(rec.density_den)
          << "," << csv_num(rec.density_num / rec.density_den);
    } else if (a == Algorithm::kOrdering) {
      out << "," << rec.realized_max_outdegree;
    } else {
      out << "," << csv_num(rec.max_abs_error) << ","
          << csv_num(rec.max_below_true) << "," << csv_num(rec.max_above_phi);
    }
    out << "," << (rec.meets_bound ? 1 : 0);
    if (report.spec.timings) out << "," << csv_num(rec.wall_ms);
    out << "\n";
  }
  return out.str();
}

std::string report_to_json(const AuditReport& report) {
  Json j;
  Json spec;
  spec["algorithm"] = to_string(report.spec.algorithm);
  spec["epsilon"] = report.spec.epsilon;
  spec["eta"] = report.spec.eta;
  spec["step_const"] = report.spec.step_const;
  spec["c_prime"] = report.spec.c_prime;
  if (report.spec.schedule_start)
    spec["schedule_start"] = *report.spec.schedule_start;
  if (report.spec.schedule_step)
    spec["schedule_step"] = *report.spec.schedule_step;
  spec["trials"] = report.spec.trials;
  spec["seed"] = report.spec.seed;
  spec["engine"] =
      report.spec.engine == PeelEngine::kNaive ? "naive" : "fast";
  j["spec"] = spec;
  j["environment"] = environment_stamp();
  j["event"] = report.event_name;
  j["bucket_width"] = report.bucket_width;
  j["confidence"] = "wilson-95";
  Json buckets = Json::array();
  for (const AuditBucket& b : report.buckets) {
    Json row;
    row["bucket"] = b.bucket;
    row["count_a"] = b.count_a;
    row["count_b"] = b.count_b;
    row["log_ratio"] = b.log_ratio;
    row["log_ratio_lcb"] = b.log_ratio_lcb;
    row["log_ratio_ucb"] = b.log_ratio_ucb;
    buckets.push_back(std::move(row));
  }
  j["buckets"] = buckets;
  j["max_abs_log_ratio"] = report.max_abs_log_ratio;
  j["max_log_ratio_lcb"] = report.max_log_ratio_lcb;
  j["max_log_ratio_ucb"] = report.max_log_ratio_ucb;
  if (report.inconclusive) j["inconclusive"] = "sample too small";
  j["violation"] = report.violation;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "bucket,count_a,count_b,log_ratio,log_ratio_lcb,log_ratio_ucb\n";
  for (const AuditBucket& b : report.buckets) {
    out << b.bucket << "," << b.count_a << "," << b.count_b << ","
        << csv_num(b.log_ratio) << "," << csv_num(b.log_ratio_lcb) << ","
        << csv_num(b.log_ratio_ucb) << "\n";
  }
  return out.str();
}

std::string report_to_json(const EquivalenceReport& report) {
  Json j;
  Json spec;
  spec["epsilon"] = report.spec.epsilon;
  spec["trials"] = report.spec.trials;
  spec["seed"] = report.spec.seed;
  spec["zero_noise"] = report.spec.zero_noise;
  j["spec"] = spec;
  j["environment"] = environment_stamp();
  j["threshold"] = report.threshold;
  j["tv_distance"] = report.tv_distance;
  j["distinct_sets_naive"] = report.distinct_sets_naive;
  j["distinct_sets_fast"] = report.distinct_sets_fast;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const EquivalenceReport& report) {
  std::ostringstream out;
  out << "threshold,tv_distance,distinct_sets_naive,distinct_sets_fast\n";
  out << csv_num(report.threshold) << "," << csv_num(report.tv_distance) << ","
      << report.distinct_sets_naive << "," << report.distinct_sets_fast
      << "\n";
  return out.str();
}

}  // namespace coredp
