#pragma once

#include <cstdint>
#include <vector>

#include "coredp/graph.hpp"

namespace coredp {

using CoreLabels = std::vector<std::uint32_t>;

/// Exact core numbers via the linear-time bucket-queue peel.
CoreLabels exact_core_numbers(const Graph& g);

inline std::uint32_t degeneracy(const CoreLabels& labels) {
  std::uint32_t d = 0;
  for (auto k : labels) d = std::max(d, k);
  return d;
}

/// Min-degree peel order, ties broken by smallest vertex id. Orienting
/// edges earlier -> later in this order gives max out-degree exactly the
/// degeneracy.
std::vector<VertexId> degeneracy_ordering(const Graph& g);

/// Exact |E_S|/|V_S| kept as an integer pair so ties compare exactly.
struct ExactDensity {
  std::uint64_t edges = 0;
  std::uint64_t vertices = 0;

  double value() const {
    return static_cast<double>(edges) / static_cast<double>(vertices);
  }
  // edges/vertices < o.edges/o.vertices by cross-multiplication.
  bool operator<(const ExactDensity& o) const {
    return edges * o.vertices < o.edges * vertices;
  }
  bool operator==(const ExactDensity& o) const {
    return edges * o.vertices == o.edges * vertices;
  }
};

ExactDensity density(const Graph& g, const VertexSubset& s);

struct DensityResult {
  VertexSubset subset;
  ExactDensity density;
};

/// Exhaustive densest subgraph over all nonempty subsets. Ties broken by
/// smaller subset, then lexicographically smaller member list. Capped at
/// n <= 20 (CapacityError).
DensityResult brute_force_densest(const Graph& g);

/// Max out-degree when edges are oriented from earlier to later positions
/// in `order`, which must be a permutation of 0..n-1 (UsageError).
std::uint32_t orient_and_max_outdegree(const Graph& g,
                                       std::span<const VertexId> order);

}  // namespace coredp
