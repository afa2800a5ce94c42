#pragma once

#include <stdexcept>
#include <string>

namespace grodep {

// Requested dense simulation exceeds the configured qubit limits.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid tool configuration: bad grids, unknown ids, malformed config files.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grodep
