#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coredp/graph.hpp"
#include "coredp/noise.hpp"
#include "coredp/private_kcore.hpp"

namespace coredp {

/// Pure post-processing step of the densest-subgraph algorithm: all
/// vertices whose label reaches max label - c_prime * ln(n) / epsilon.
VertexSubset densest_from_labels(const Graph& g,
                                 const std::vector<double>& labels,
                                 double epsilon, double c_prime);

/// Private densest subgraph: one dp_core_numbers run (additive schedule
/// unless overridden) followed by the label cut above.
VertexSubset dp_densest_subgraph(const Graph& g, double epsilon,
                                 double c_prime, NoiseOracle& oracle,
                                 std::optional<Schedule> schedule = {},
                                 PeelEngine engine = PeelEngine::kFast);

struct OrderingResult {
  std::vector<VertexId> order;  // permutation of 0..n-1
  // Diagnostic only, computed non-privately for evaluation reports; never
  // part of the private output.
  std::uint32_t realized_max_outdegree = 0;
};

/// Private low out-degree ordering: the additive peel with every vertex
/// appended to J at its removal moment; never-removed survivors go last in
/// ascending id order.
OrderingResult dp_low_outdegree_ordering(const Graph& g, double epsilon,
                                         const Schedule& schedule,
                                         NoiseOracle& oracle,
                                         PeelEngine engine = PeelEngine::kFast);

}  // namespace coredp
