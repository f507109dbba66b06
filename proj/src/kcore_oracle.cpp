#include "coredp/kcore_oracle.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "coredp/errors.hpp"

namespace coredp {

// Batagelj-Zaversnik bin-sort peel.
CoreLabels exact_core_numbers(const Graph& g) {
  const VertexId n = g.n();
  CoreLabels core(n, 0);
  if (n == 0) return core;

  std::uint32_t max_deg = 0;
  std::vector<std::uint32_t> deg(n);
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  std::vector<std::uint64_t> bin(max_deg + 2, 0);
  for (VertexId v = 0; v < n; ++v) ++bin[deg[v]];
  std::uint64_t start = 0;
  for (std::uint32_t d = 0; d <= max_deg; ++d) {
    const std::uint64_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<VertexId> order(n);
  std::vector<std::uint64_t> pos(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]];
    order[pos[v]] = v;
    ++bin[deg[v]];
  }
  for (std::uint32_t d = max_deg + 1; d >= 1; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::uint64_t i = 0; i < n; ++i) {
    const VertexId v = order[i];
    core[v] = deg[v];
    for (VertexId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::uint32_t du = deg[u];
        const std::uint64_t pu = pos[u];
        const std::uint64_t pw = bin[du];
        const VertexId w = order[pw];
        if (u != w) {
          pos[u] = pw;
          pos[w] = pu;
          order[pu] = w;
          order[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

std::vector<VertexId> degeneracy_ordering(const Graph& g) {
  const VertexId n = g.n();
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<std::uint32_t> deg(n);
  std::vector<std::uint8_t> removed(n, 0);
  // (degree, id) min-heap with lazy entries; id ties resolve smallest-first.
  using Entry = std::pair<std::uint32_t, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.emplace(deg[v], v);
  }
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || d != deg[v]) continue;  // stale entry
    removed[v] = 1;
    order.push_back(v);
    for (VertexId u : g.neighbors(v)) {
      if (!removed[u]) {
        --deg[u];
        heap.emplace(deg[u], u);
      }
    }
  }
  return order;
}

ExactDensity density(const Graph& g, const VertexSubset& s) {
  if (s.empty()) throw UsageError("density: subset is empty");
  std::uint64_t edges = 0;
  for (VertexId v : s.members()) {
    for (VertexId u : g.neighbors(v)) {
      if (u > v && s.contains(u)) ++edges;
    }
  }
  return {edges, s.size()};
}

DensityResult brute_force_densest(const Graph& g) {
  const VertexId n = g.n();
  if (n > 20) {
    throw CapacityError("brute_force_densest: capped at n <= 20, got n=" +
                        std::to_string(n));
  }
  if (n == 0) throw UsageError("brute_force_densest: empty graph");

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : g.neighbors(v)) adj_mask[v] |= 1u << u;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint16_t> edge_count(static_cast<std::size_t>(full) + 1, 0);
  std::uint32_t best_mask = 1;
  ExactDensity best{0, 1};
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    edge_count[mask] = static_cast<std::uint16_t>(
        edge_count[rest] + std::popcount(adj_mask[v] & rest));
    const ExactDensity cand{edge_count[mask],
                            static_cast<std::uint64_t>(std::popcount(mask))};
    if (best < cand) {
      best = cand;
      best_mask = mask;
    } else if (best == cand) {
      const std::uint64_t cs = std::popcount(mask);
      const std::uint64_t bs = std::popcount(best_mask);
      bool better = cs < bs;
      if (cs == bs) {
        // Lexicographically earlier member list: owns the lowest
        // differing vertex.
        const std::uint32_t diff = mask ^ best_mask;
        better = diff != 0 && (mask & (diff & ~(diff - 1)));
      }
      if (better) {
        best = cand;
        best_mask = mask;
      }
    }
  }
  VertexSubset subset(g);
  for (VertexId v = 0; v < n; ++v) {
    if (best_mask & (1u << v)) subset.insert(v);
  }
  return {std::move(subset), best};
}

std::uint32_t orient_and_max_outdegree(const Graph& g,
                                       std::span<const VertexId> order) {
  const VertexId n = g.n();
  if (order.size() != n) {
    throw UsageError("orient_and_max_outdegree: order has wrong length");
  }
  std::vector<std::uint32_t> pos(n, n);
  for (VertexId i = 0; i < n; ++i) {
    const VertexId v = order[i];
    if (v >= n || pos[v] != n) {
      throw UsageError("orient_and_max_outdegree: order is not a permutation");
    }
    pos[v] = i;
  }
  std::uint32_t best = 0;
  for (VertexId v = 0; v < n; ++v) {
    std::uint32_t out = 0;
    for (VertexId u : g.neighbors(v)) out += pos[u] > pos[v] ? 1 : 0;
    best = std::max(best, out);
  }
  return best;
}

}  // namespace coredp
