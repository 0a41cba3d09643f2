#pragma once

#include <stdexcept>
#include <string>

namespace edlat {

/// Bad experiment configuration (file contents, CLI values, codebook geometry).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// No feasible blocklength below the search cap.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A latency model was asked for a phase distribution it does not support.
class UnsupportedModelError : public std::invalid_argument {
 public:
  explicit UnsupportedModelError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace edlat
