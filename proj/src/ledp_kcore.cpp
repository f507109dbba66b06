#include "coredp/ledp_kcore.hpp"

#include <cmath>
#include <ostream>

#include "coredp/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coredp {

namespace {

constexpr const char* kRandomizerName = "noisy-frontier-degree-threshold";

void validate(const LedpConfig& config, VertexId n) {
  if (n < 2) throw InputError("ledp: n must be >= 2");
  if (!(config.epsilon > 0.0)) throw InputError("ledp: epsilon > 0 required");
  if (!(config.eta > 0.0)) throw InputError("ledp: eta > 0 required");
}

}  // namespace

std::uint32_t ceil_log2(std::uint64_t n) {
  std::uint32_t l = 0;
  while ((1ULL << l) < n) ++l;
  return l;
}

std::uint32_t round_count(VertexId n) {
  if (n < 2) throw InputError("round_count: n must be >= 2");
  const std::uint32_t l = ceil_log2(n);
  return 4 * l * l;
}

double level_threshold(std::uint32_t r, VertexId n, double psi) {
  const std::uint32_t group = r / (2 * ceil_log2(n));
  return std::pow(1.0 + psi, static_cast<double>(group));
}

double ledp_estimate_from_level(std::uint32_t level, VertexId n,
                                const LedpConfig& config) {
  const double psi = config.psi();
  const std::uint64_t levels_per_core_group = 4 * static_cast<std::uint64_t>(
      std::ceil(std::log(static_cast<double>(n)) / std::log1p(psi)));
  const std::uint64_t quotient = (level + 1ULL) / levels_per_core_group;
  const double exponent =
      quotient >= 1 ? static_cast<double>(quotient - 1) : 0.0;
  return (2.0 + config.lambda()) * std::pow(1.0 + psi, exponent);
}

LedpResult ledp_core_numbers(const Graph& g, const LedpConfig& config,
                             NoiseOracle& oracle) {
  const VertexId n = g.n();
  validate(config, n);
  const std::uint32_t rounds = round_count(n);
  const double psi = config.psi();
  const double offset_scale = 4.0 / config.epsilon;
  const double count_scale = 8.0 / config.epsilon;

  // Each party owns its randomness; the curator never sees raw draws.
  std::vector<NoiseOracle> node_oracle;
  node_oracle.reserve(n);
  for (VertexId i = 0; i < n; ++i) node_oracle.push_back(oracle.spawn(i));
  std::vector<double> offsets(n);
  for (VertexId i = 0; i < n; ++i) {
    offsets[i] = node_oracle[i].laplace(offset_scale);
  }

  std::vector<std::uint32_t> level(n, 0);
  LedpResult result;
  result.transcript.reserve(rounds);

  std::vector<VertexId> frontier;
  for (std::uint32_t r = 0; r < rounds; ++r) {
    frontier.clear();
    for (VertexId i = 0; i < n; ++i) {
      if (level[i] == r) frontier.push_back(i);
    }
    const double threshold = level_threshold(r, n, psi);
    std::vector<std::uint8_t> bits(frontier.size(), 0);

    // Round body: every frontier node decides independently.
    const std::int64_t fsize = static_cast<std::int64_t>(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (fsize > 512)
#endif
    for (std::int64_t idx = 0; idx < fsize; ++idx) {
      const VertexId i = frontier[idx];
      std::uint32_t same_level = 0;
      for (VertexId j : g.neighbors(i)) same_level += level[j] == r ? 1 : 0;
      const double noisy =
          same_level + node_oracle[i].laplace(count_scale);
      bits[idx] = noisy <= threshold + offsets[i] ? 0 : 1;
    }

    TranscriptRound record;
    record.round = r;
    record.queried = frontier;
    record.randomizer = kRandomizerName;
    record.epsilon = config.epsilon;
    record.released = bits;
    result.transcript.push_back(std::move(record));

    for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
      if (bits[idx]) level[frontier[idx]] = r + 1;
    }
  }

  result.levels = level;
  result.labels.resize(n);
  for (VertexId i = 0; i < n; ++i) {
    result.labels[i] = ledp_estimate_from_level(level[i], n, config);
  }
  return result;
}

void write_transcript(const Transcript& transcript, std::ostream& out) {
  for (const TranscriptRound& rec : transcript) {
    out << "{\"round\":" << rec.round << ",\"queried\":[";
    for (std::size_t i = 0; i < rec.queried.size(); ++i) {
      out << (i ? "," : "") << rec.queried[i];
    }
    out << "],\"randomizer\":\"" << rec.randomizer
        << "\",\"epsilon\":" << rec.epsilon << ",\"released\":[";
    for (std::size_t i = 0; i < rec.released.size(); ++i) {
      out << (i ? "," : "") << static_cast<int>(rec.released[i]);
    }
    out << "]}\n";
  }
}

}  // namespace coredp
