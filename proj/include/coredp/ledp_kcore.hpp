#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "coredp/graph.hpp"
#include "coredp/noise.hpp"

namespace coredp {

struct LedpConfig {
  double epsilon = 1.0;
  double eta = 0.5;

  double psi() const { return 0.1 * eta; }
  double lambda() const {
    return 2.0 * (30.0 - eta) * eta / ((eta + 10.0) * (eta + 10.0));
  }
};

/// Smallest L with 2^L >= n.
std::uint32_t ceil_log2(std::uint64_t n);

/// Rounds of the level protocol: 4 * ceil_log2(n)^2. Requires n >= 2.
std::uint32_t round_count(VertexId n);

/// Deterministic part of the round-r rise threshold:
/// (1 + psi)^floor(r / (2 * ceil_log2(n))).
double level_threshold(std::uint32_t r, VertexId n, double psi);

/// Core-number estimate assigned to a node whose final level is `level`.
double ledp_estimate_from_level(std::uint32_t level, VertexId n,
                                const LedpConfig& config);

/// One protocol round as released to the curator: which parties were
/// queried, with which randomizer and budget, and the bits they published.
struct TranscriptRound {
  std::uint32_t round = 0;
  std::vector<VertexId> queried;       // frontier nodes, ascending
  std::string randomizer;
  double epsilon = 0.0;
  std::vector<std::uint8_t> released;  // A_i per queried node
};

using Transcript = std::vector<TranscriptRound>;

struct LedpResult {
  std::vector<double> labels;
  std::vector<std::uint32_t> levels;  // final level per node
  Transcript transcript;
};

/// The O(log^2 n)-round local protocol. Every node draws its own offset
/// Lap(4/epsilon) once; in round r each frontier node (level == r) counts
/// same-level neighbors, perturbs the count with Lap(8/epsilon), and
/// releases one bit deciding whether it rises a level. Nodes off the
/// frontier are not queried and release nothing. Per-node randomness comes
/// from oracle.spawn(node), so rounds are thread-parallel and every node's
/// bits are replayable from its own stream plus the public transcript.
LedpResult ledp_core_numbers(const Graph& g, const LedpConfig& config,
                             NoiseOracle& oracle);

/// One JSON object per line per round: round, queried ids, randomizer,
/// privacy parameter, released bits.
void write_transcript(const Transcript& transcript, std::ostream& out);

}  // namespace coredp
