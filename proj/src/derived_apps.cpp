#include "coredp/derived_apps.hpp"

#include <algorithm>
#include <cmath>

#include "coredp/errors.hpp"
#include "coredp/kcore_oracle.hpp"

namespace coredp {

VertexSubset densest_from_labels(const Graph& g,
                                 const std::vector<double>& labels,
                                 double epsilon, double c_prime) {
  if (labels.size() != g.n()) {
    throw UsageError("densest_from_labels: label vector has wrong length");
  }
  const double khat_max =
      labels.empty() ? 0.0 : *std::max_element(labels.begin(), labels.end());
  const double cut =
      khat_max - c_prime * std::log(static_cast<double>(g.n())) / epsilon;
  VertexSubset s(g);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (labels[v] >= cut) s.insert(v);
  }
  return s;
}

VertexSubset dp_densest_subgraph(const Graph& g, double epsilon,
                                 double c_prime, NoiseOracle& oracle,
                                 std::optional<Schedule> schedule,
                                 PeelEngine engine) {
  if (!(epsilon > 0.0)) throw InputError("densest: epsilon must be positive");
  if (!(c_prime > 0.0)) throw InputError("densest: c_prime must be positive");
  const Schedule sched =
      schedule ? *schedule
               : default_schedule(g.n(), epsilon, Schedule::Kind::kAdditive);
  const DpCoreResult core =
      dp_core_numbers(g, epsilon, sched, oracle, engine);
  return densest_from_labels(g, core.labels, epsilon, c_prime);
}

OrderingResult dp_low_outdegree_ordering(const Graph& g, double epsilon,
                                         const Schedule& schedule,
                                         NoiseOracle& oracle,
                                         PeelEngine engine) {
  const DpCoreResult core =
      dp_core_numbers(g, epsilon, schedule, oracle, engine);
  OrderingResult result;
  result.order = core.order;
  result.realized_max_outdegree = orient_and_max_outdegree(g, result.order);
  return result;
}

}  // namespace coredp
