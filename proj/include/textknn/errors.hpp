#pragma once

#include <stdexcept>
#include <string>

namespace textknn {

/// File or stream failure. The CLI maps this to exit code 2.
class IoError : public std::runtime_error {
public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument, configuration, or malformed input data.
/// The CLI maps this to exit code 3.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace textknn
