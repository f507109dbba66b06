// Experiment front end: runs the decomposition algorithms against exact
// oracles, the empirical privacy audit, and the engine-equivalence check.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coredp/errors.hpp"
#include "coredp/harness.hpp"
#include "coredp/ledp_kcore.hpp"
#include "coredp/report.hpp"

namespace {

using namespace coredp;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitBounds = 3;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << text;
}

Graph resolve_graph(const std::string& path, const std::string& gen) {
  if (!path.empty()) return load_graph(path).graph;
  return generate(parse_gen_spec(gen));
}

struct CommonFlags {
  std::string graph_path;
  std::string generator;
  std::string out_path;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags* flags) {
  cmd->add_option("--graph", flags->graph_path, "edge-list file");
  cmd->add_option("--gen", flags->generator,
                  "generator spec model:n[:p[:seed]], e.g. gnp:100:0.1:7");
  cmd->add_option("--out", flags->out_path, "output path (default stdout)");
  cmd->add_option("--format", flags->format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

int run_main(const ExperimentSpec& spec, const CommonFlags& flags,
             bool assert_bounds, const std::string& transcript_out) {
  RunReport report = run(spec);
  write_output(flags.format == "csv" ? report_to_csv(report)
                                     : report_to_json(report),
               flags.out_path);
  if (!transcript_out.empty()) {
    if (spec.algorithm != Algorithm::kLedpKcore) {
      throw ValidationError("--transcript-out requires --algorithm ledp-kcore");
    }
    Graph g = resolve_graph(spec.graph_path, spec.generator);
    NoiseOracle oracle(spec.seed, spec.zero_noise);
    LedpResult r = ledp_core_numbers(g, {spec.epsilon, spec.eta}, oracle);
    std::ofstream out(transcript_out);
    if (!out) throw IoError("cannot open transcript file: " + transcript_out);
    write_transcript(r.transcript, out);
  }
  if (assert_bounds &&
      report.trials_meeting_bound < report.trials.size()) {
    std::cerr << "bounds check failed: " << report.trials_meeting_bound << "/"
              << report.trials.size() << " trials within (phi, zeta)\n";
    return kExitBounds;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"differentially private k-core decomposition workbench"};
  app.require_subcommand(0, 1);

  // Default command: run an algorithm over trials and report metrics.
  CommonFlags run_flags;
  ExperimentSpec spec;
  std::string algorithm = "oracle";
  std::string engine = "fast";
  std::string transcript_out;
  bool assert_bounds = false;
  double schedule_start = 0.0;
  double schedule_step = 0.0;
  app.add_option("--algorithm", algorithm,
                 "oracle|dp-kcore-additive|dp-kcore-geometric|ledp-kcore|"
                 "densest|ordering");
  add_common(&app, &run_flags);
  app.add_option("--epsilon", spec.epsilon, "privacy budget");
  app.add_option("--eta", spec.eta, "multiplicative slack");
  app.add_option("--step-const", spec.step_const,
                 "schedule constant (start = step = c*ln(n)/epsilon)");
  app.add_option("--cprime", spec.c_prime, "densest-subgraph cut constant");
  app.add_option("--schedule-start", schedule_start,
                 "override the first threshold");
  app.add_option("--schedule-step", schedule_step,
                 "override the additive step");
  app.add_option("--trials", spec.trials, "trial count");
  app.add_option("--seed", spec.seed, "base seed; trial i uses seed+i");
  app.add_option("--engine", engine, "naive|fast")
      ->check(CLI::IsMember({"naive", "fast"}));
  app.add_flag("--zero-noise", spec.zero_noise,
               "deterministic test mode: all Laplace draws are 0");
  app.add_option("--workers", spec.workers, "parallel trial workers (0=all)");
  app.add_flag("--timings", spec.timings, "include wall times in reports");
  app.add_flag("--assert-bounds", assert_bounds,
               "exit 3 unless every trial meets its (phi, zeta) bound");
  app.add_option("--transcript-out", transcript_out,
                 "write the trial-0 LEDP transcript (JSONL)");

  // audit: empirical DP check on an edge-neighboring pair.
  CLI::App* audit = app.add_subcommand(
      "audit", "estimate the DP log-ratio on a neighboring graph pair");
  CommonFlags audit_flags;
  AuditSpec audit_spec;
  std::string audit_algorithm = "dp-kcore-additive";
  std::string audit_engine = "naive";
  std::string toggle_edge;
  double audit_start = 0.0;
  double audit_step = 0.0;
  bool audit_assert = false;
  add_common(audit, &audit_flags);
  audit->add_option("--algorithm", audit_algorithm, "mechanism to audit");
  audit->add_option("--toggle-edge", toggle_edge,
                    "u:v pair flipped to form the neighboring graph")
      ->required();
  audit->add_option("--epsilon", audit_spec.epsilon, "privacy budget");
  audit->add_option("--eta", audit_spec.eta, "multiplicative slack");
  audit->add_option("--step-const", audit_spec.step_const, "schedule constant");
  audit->add_option("--cprime", audit_spec.c_prime, "densest cut constant");
  audit->add_option("--schedule-start", audit_start, "first threshold");
  audit->add_option("--schedule-step", audit_step, "additive step");
  audit->add_option("--event-vertex", audit_spec.event_vertex,
                    "vertex whose coarsened output is audited");
  audit->add_option("--bucket-width", audit_spec.bucket_width,
                    "label quantization width (0 = schedule step)");
  audit->add_option("--trials", audit_spec.trials, "trials per graph");
  audit->add_option("--seed", audit_spec.seed, "base seed");
  audit->add_option("--engine", audit_engine, "naive|fast")
      ->check(CLI::IsMember({"naive", "fast"}));
  audit->add_option("--workers", audit_spec.workers, "parallel workers");
  audit->add_flag("--assert-bounds", audit_assert,
                  "exit 3 when a violation is flagged");

  // equivalence: TV distance between the two peel engines.
  CLI::App* equiv = app.add_subcommand(
      "equivalence", "empirical naive/fast survivor-distribution comparison");
  CommonFlags equiv_flags;
  EquivalenceSpec equiv_spec;
  double tv_bound = 0.05;
  bool equiv_assert = false;
  add_common(equiv, &equiv_flags);
  equiv->add_option("--epsilon", equiv_spec.epsilon, "privacy budget");
  equiv->add_option("--threshold", equiv_spec.threshold,
                    "fixed peel threshold (0 = 60*ln(n)/epsilon)");
  equiv->add_option("--trials", equiv_spec.trials, "trials per engine");
  equiv->add_option("--seed", equiv_spec.seed, "base seed");
  equiv->add_flag("--zero-noise", equiv_spec.zero_noise, "deterministic mode");
  equiv->add_option("--workers", equiv_spec.workers, "parallel workers");
  equiv->add_option("--tv-bound", tv_bound, "bound used by --assert-bounds");
  equiv->add_flag("--assert-bounds", equiv_assert,
                  "exit 3 when TV distance exceeds --tv-bound");

  try {
    app.parse(argc, argv);

    if (audit->parsed()) {
      if (auto a = parse_algorithm(audit_algorithm)) {
        audit_spec.algorithm = *a;
      } else {
        throw ValidationError("unknown algorithm: " + audit_algorithm);
      }
      audit_spec.engine =
          audit_engine == "naive" ? PeelEngine::kNaive : PeelEngine::kFast;
      if (audit_start > 0.0) audit_spec.schedule_start = audit_start;
      if (audit_step > 0.0) audit_spec.schedule_step = audit_step;
      if (audit_flags.graph_path.empty() == audit_flags.generator.empty()) {
        throw ValidationError("audit: exactly one of --graph/--gen required");
      }
      const Graph g_a =
          resolve_graph(audit_flags.graph_path, audit_flags.generator);
      const auto sep = toggle_edge.find(':');
      if (sep == std::string::npos) {
        throw ValidationError("audit: --toggle-edge must look like u:v");
      }
      const VertexId u = static_cast<VertexId>(
          std::stoul(toggle_edge.substr(0, sep)));
      const VertexId v =
          static_cast<VertexId>(std::stoul(toggle_edge.substr(sep + 1)));
      std::vector<Edge> edges = g_a.edges();
      if (g_a.has_edge(u, v)) {
        std::erase(edges, Edge{std::min(u, v), std::max(u, v)});
      } else {
        edges.emplace_back(u, v);
      }
      const Graph g_b = Graph::from_edge_list(edges, g_a.n());
      AuditReport report = privacy_audit(g_a, g_b, audit_spec);
      write_output(audit_flags.format == "csv" ? report_to_csv(report)
                                               : report_to_json(report),
                   audit_flags.out_path);
      if (audit_assert && report.violation) {
        std::cerr << "privacy audit flagged a violation\n";
        return kExitBounds;
      }
      return kExitOk;
    }

    if (equiv->parsed()) {
      if (equiv_flags.graph_path.empty() == equiv_flags.generator.empty()) {
        throw ValidationError(
            "equivalence: exactly one of --graph/--gen required");
      }
      const Graph g =
          resolve_graph(equiv_flags.graph_path, equiv_flags.generator);
      EquivalenceReport report = equivalence_test(g, equiv_spec);
      write_output(equiv_flags.format == "csv" ? report_to_csv(report)
                                               : report_to_json(report),
                   equiv_flags.out_path);
      if (equiv_assert && report.tv_distance > tv_bound) {
        std::cerr << "TV distance " << report.tv_distance << " exceeds bound "
                  << tv_bound << "\n";
        return kExitBounds;
      }
      return kExitOk;
    }

    if (auto a = parse_algorithm(algorithm)) {
      spec.algorithm = *a;
    } else {
      throw ValidationError("unknown algorithm: " + algorithm);
    }
    spec.engine = engine == "naive" ? PeelEngine::kNaive : PeelEngine::kFast;
    spec.graph_path = run_flags.graph_path;
    spec.generator = run_flags.generator;
    if (schedule_start > 0.0) spec.schedule_start = schedule_start;
    if (schedule_step > 0.0) spec.schedule_step = schedule_step;
    return run_main(spec, run_flags, assert_bounds, transcript_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
