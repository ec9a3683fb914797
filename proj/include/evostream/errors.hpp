#pragma once

#include <stdexcept>
#include <string>

namespace evostream {

/// Invalid configuration (bad flags, bad experiment spec). CLI exit code 1.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unusable input data (CSV parse failures, missing files). CLI exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evostream
