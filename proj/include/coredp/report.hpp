#pragma once

#include <string>

#include "coredp/harness.hpp"

namespace coredp {

// Reports serialize with stable key order; reruns of the same spec produce
// byte-identical output (timing fields only appear when spec.timings).
std::string report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);

std::string report_to_json(const AuditReport& report);
std::string report_to_csv(const AuditReport& report);

std::string report_to_json(const EquivalenceReport& report);
std::string report_to_csv(const EquivalenceReport& report);

}  // namespace coredp
