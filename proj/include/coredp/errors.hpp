#pragma once

#include <stdexcept>
#include <string>

namespace coredp {

// Malformed data handed to a constructor or generator.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A caller broke an API precondition (programming error, not data error).
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

// Input is valid but exceeds a hard size cap of the operation.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Experiment/audit specification rejected before any work started.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace coredp
