#pragma once

#include <stdexcept>

namespace wco {

/// Malformed configuration or an operator that fails validation.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an essential norm is requested for an unbounded operator.
class UnboundedOperatorError : public std::runtime_error {
 public:
  UnboundedOperatorError() : std::runtime_error("essential norm undefined for unbounded operator") {}
};

}  // namespace wco
