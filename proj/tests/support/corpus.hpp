#pragma once

#include <string>
#include <vector>

#include "coredp/graph.hpp"

namespace coredp::testsupport {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// The 50-graph evaluation corpus: paths, cycles, stars, complete graphs,
/// and seeded gnp instances up to n = 200.
std::vector<NamedGraph> build_corpus();

}  // namespace coredp::testsupport
