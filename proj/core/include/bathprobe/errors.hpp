#pragma once

#include <stdexcept>
#include <string>

namespace bathprobe {

// Raised when an input lies outside the mathematical domain of an operation
// (negative time, bosonic bath at zero inverse temperature, unphysical state).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Raised for invalid user configuration (CLI flags, JSON config, output path).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bathprobe
