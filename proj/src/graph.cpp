#include "coredp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "coredp/errors.hpp"

namespace coredp {

Graph Graph::from_edge_list(std::span<const Edge> edges, VertexId n) {
  std::vector<Edge> pairs;
  pairs.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge endpoint " + std::to_string(std::max(u, v)) +
                       " out of range for n=" + std::to_string(n));
    }
    if (u == v) {
      throw InputError("self-loop at vertex " + std::to_string(u));
    }
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  Graph g;
  g.n_ = n;
  g.m_ = pairs.size();
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : pairs) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adj_.resize(2 * pairs.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : pairs) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSubset::VertexSubset(const Graph& parent, bool full)
    : parent_(&parent), in_(parent.n(), full ? 1 : 0),
      size_(full ? parent.n() : 0) {}

void VertexSubset::insert(VertexId v) {
  if (v >= in_.size()) {
    throw InputError("vertex " + std::to_string(v) + " outside parent graph");
  }
  if (!in_[v]) {
    in_[v] = 1;
    ++size_;
  }
}

void VertexSubset::erase(VertexId v) {
  if (v < in_.size() && in_[v]) {
    in_[v] = 0;
    --size_;
  }
}

std::vector<VertexId> VertexSubset::members() const {
  std::vector<VertexId> out;
  out.reserve(size_);
  for (VertexId v = 0; v < in_.size(); ++v) {
    if (in_[v]) out.push_back(v);
  }
  return out;
}

std::uint32_t induced_degree(const Graph& g, VertexId v,
                             const VertexSubset& active) {
  if (!active.contains(v)) {
    throw UsageError("induced_degree: vertex " + std::to_string(v) +
                     " is not in the active set");
  }
  std::uint32_t d = 0;
  for (VertexId u : g.neighbors(v)) d += active.contains(u) ? 1 : 0;
  return d;
}

std::vector<Graph> edge_neighbors_of(const Graph& g) {
  std::vector<Graph> out;
  const VertexId n = g.n();
  if (n >= 2) out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<Edge> base = g.edges();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      std::vector<Edge> edges = base;
      if (g.has_edge(u, v)) {
        edges.erase(std::find(edges.begin(), edges.end(), Edge{u, v}));
      } else {
        edges.emplace_back(u, v);
      }
      out.push_back(Graph::from_edge_list(edges, n));
    }
  }
  return out;
}

bool are_edge_neighbors(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) return false;
  std::uint64_t diff = 0;
  for (VertexId u = 0; u < a.n(); ++u) {
    auto na = a.neighbors(u);
    auto nb = b.neighbors(u);
    std::vector<VertexId> sym;
    std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(),
                                  std::back_inserter(sym));
    diff += sym.size();
  }
  return diff == 2;  // one undirected edge appears in two adjacency lists
}

namespace {

Graph gnp(VertexId n, double p, std::uint64_t seed) {
  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(edges, n);
  }
  if (p <= 0.0 || n < 2) return Graph::from_edge_list(edges, n);

  // Skip-length sampling: walks the C(n,2) pairs with geometric gaps.
  std::mt19937_64 rng(seed);
  const double log1mp = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < static_cast<std::int64_t>(n)) {
    const double r =
        (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / log1mp));
    while (w >= v && v < static_cast<std::int64_t>(n)) {
      w -= v;
      ++v;
    }
    if (v < static_cast<std::int64_t>(n)) {
      edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
  }
  return Graph::from_edge_list(edges, n);
}

}  // namespace

Graph generate(const GenSpec& spec) {
  const VertexId n = spec.n;
  if (n < 1) throw InputError("generate: n must be >= 1");
  std::vector<Edge> edges;
  switch (spec.model) {
    case GraphModel::kPath:
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case GraphModel::kCycle:
      if (n < 3) throw InputError("generate: cycle needs n >= 3");
      for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(n - 1, 0);
      break;
    case GraphModel::kComplete:
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case GraphModel::kStar:
      for (VertexId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case GraphModel::kGnp:
      if (spec.p < 0.0 || spec.p > 1.0) {
        throw InputError("generate: gnp probability must be in [0, 1]");
      }
      return gnp(n, spec.p, spec.seed);
    case GraphModel::kBarbell: {
      if (n < 2) throw InputError("generate: barbell needs n >= 2");
      const VertexId a = n / 2;
      for (VertexId u = 0; u < a; ++u)
        for (VertexId v = u + 1; v < a; ++v) edges.emplace_back(u, v);
      for (VertexId u = a; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      edges.emplace_back(a - 1, a);
      break;
    }
  }
  return Graph::from_edge_list(edges, n);
}

GenSpec parse_gen_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2) {
    throw InputError("generator spec must look like model:n[:p[:seed]]: " +
                     text);
  }
  GenSpec spec;
  const std::string& model = parts[0];
  if (model == "path") spec.model = GraphModel::kPath;
  else if (model == "cycle") spec.model = GraphModel::kCycle;
  else if (model == "complete") spec.model = GraphModel::kComplete;
  else if (model == "star") spec.model = GraphModel::kStar;
  else if (model == "gnp") spec.model = GraphModel::kGnp;
  else if (model == "barbell") spec.model = GraphModel::kBarbell;
  else throw InputError("unknown graph model: " + model);
  try {
    spec.n = static_cast<VertexId>(std::stoul(parts[1]));
    if (spec.model == GraphModel::kGnp) {
      if (parts.size() < 3) throw InputError("gnp needs a probability");
      spec.p = std::stod(parts[2]);
      if (parts.size() > 3) spec.seed = std::stoull(parts[3]);
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("unparseable generator spec: " + text);
  }
  return spec;
}

std::string to_string(const GenSpec& spec) {
  std::string name;
  switch (spec.model) {
    case GraphModel::kPath: name = "path"; break;
    case GraphModel::kCycle: name = "cycle"; break;
    case GraphModel::kComplete: name = "complete"; break;
    case GraphModel::kStar: name = "star"; break;
    case GraphModel::kGnp: name = "gnp"; break;
    case GraphModel::kBarbell: name = "barbell"; break;
  }
  std::string out = name + ":" + std::to_string(spec.n);
  if (spec.model == GraphModel::kGnp) {
    std::ostringstream p;
    p << spec.p;
    out += ":" + p.str() + ":" + std::to_string(spec.seed);
  }
  return out;
}

LoadedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  bool have_header_n = false;
  std::uint64_t header_n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::size_t eq = line.find("n=");
      if (eq != std::string::npos) {
        try {
          header_n = std::stoull(line.substr(eq + 2));
          have_header_n = true;
        } catch (const std::exception&) {
          // a comment that merely contains "n=" is not a header
        }
      }
      continue;
    }
    std::istringstream ls(line.substr(start));
    std::uint64_t u, v;
    if (!(ls >> u >> v)) {
      throw InputError("line " + std::to_string(lineno) +
                       ": expected two vertex ids");
    }
    raw.emplace_back(u, v);
  }

  LoadedGraph out;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (have_header_n) {
    out.remapped = false;
    for (auto [u, v] : raw) {
      if (u >= header_n || v >= header_n) {
        throw InputError("vertex id exceeds declared n=" +
                         std::to_string(header_n));
      }
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    out.graph = Graph::from_edge_list(edges, static_cast<VertexId>(header_n));
    out.original_ids.resize(header_n);
    for (std::uint64_t v = 0; v < header_n; ++v) out.original_ids[v] = v;
  } else {
    std::vector<std::uint64_t> ids;
    ids.reserve(2 * raw.size());
    for (auto [u, v] : raw) {
      ids.push_back(u);
      ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::map<std::uint64_t, VertexId> to_dense;
    for (VertexId i = 0; i < ids.size(); ++i) to_dense[ids[i]] = i;
    for (auto [u, v] : raw) edges.emplace_back(to_dense[u], to_dense[v]);
    out.graph =
        Graph::from_edge_list(edges, static_cast<VertexId>(ids.size()));
    out.original_ids = std::move(ids);
    out.remapped = !out.original_ids.empty() &&
                   out.original_ids.back() + 1 != out.original_ids.size();
  }
  return out;
}

LoadedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file: " + path);
  return parse_edge_list(in);
}

void serialize(const Graph& g, std::ostream& out) {
  out << "# n=" << g.n() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace coredp
