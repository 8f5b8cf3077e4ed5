#pragma once

#include <stdexcept>
#include <string>

namespace liecomb {

// Error taxonomy mirrored by CLI exit codes: usage/capability 2,
// verification failure 3, resource cap 4.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExhaustionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace liecomb
