#pragma once

#include <stdexcept>
#include <string>

namespace tcdict {

/// Thrown when a numeric precondition or postcondition is violated
/// (non-unit vectors, out-of-range parameters, malformed input data).
class ContractViolation : public std::runtime_error {
public:
  explicit ContractViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tcdict
