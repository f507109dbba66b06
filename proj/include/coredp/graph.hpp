#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coredp {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable undirected simple graph in CSR form. Vertex ids are dense
/// integers 0..n-1; adjacency lists are sorted. Safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list: edges are symmetrized and
  /// deduplicated. Self-loops and ids >= n are rejected (InputError).
  static Graph from_edge_list(std::span<const Edge> edges, VertexId n);

  VertexId n() const { return n_; }
  std::uint64_t m() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<VertexId> adj_;
};

/// Subset of the vertices of a fixed parent graph.
class VertexSubset {
 public:
  explicit VertexSubset(const Graph& parent, bool full = false);

  bool contains(VertexId v) const { return v < in_.size() && in_[v] != 0; }
  void insert(VertexId v);
  void erase(VertexId v);
  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::vector<VertexId> members() const;  // ascending
  const Graph* parent() const { return parent_; }

  bool operator==(const VertexSubset& other) const {
    return in_ == other.in_;
  }

 private:
  const Graph* parent_;
  std::vector<std::uint8_t> in_;
  std::uint64_t size_ = 0;
};

/// Number of neighbors of v inside `active`. v must be a member (UsageError).
std::uint32_t induced_degree(const Graph& g, VertexId v,
                             const VertexSubset& active);

/// Every graph at edge-distance exactly one: each absent pair added, each
/// present edge deleted. Always yields C(n,2) graphs.
std::vector<Graph> edge_neighbors_of(const Graph& g);

/// True iff the two graphs share a vertex set and differ in exactly one edge.
bool are_edge_neighbors(const Graph& a, const Graph& b);

enum class GraphModel { kPath, kCycle, kComplete, kStar, kGnp, kBarbell };

struct GenSpec {
  GraphModel model = GraphModel::kPath;
  VertexId n = 1;
  double p = 0.5;          // gnp only
  std::uint64_t seed = 1;  // gnp only
};

Graph generate(const GenSpec& spec);

/// Parses "model:n[:p[:seed]]", e.g. "gnp:100:0.1:7".
GenSpec parse_gen_spec(const std::string& text);
std::string to_string(const GenSpec& spec);

struct LoadedGraph {
  Graph graph;
  // original_ids[v] is the id vertex v carried in the input file.
  std::vector<std::uint64_t> original_ids;
  bool remapped = false;
};

/// Edge-list text format: one "u v" pair per line, `#` comments, optional
/// `# n=<count>` header. With the header ids are literal (< n); without it,
/// distinct ids are compacted in sorted order and the mapping is recorded.
LoadedGraph parse_edge_list(std::istream& in);
LoadedGraph load_graph(const std::string& path);  // IoError on failure

void serialize(const Graph& g, std::ostream& out);

}  // namespace coredp
