#pragma once

#include <stdexcept>
#include <string>

namespace adw {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: config files, polynomial text, CLI flags. CLI exit code 2.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// A computation could not be completed: singular input, divergence,
// precondition violation at a sample point. CLI exit code 3.
struct NumericalError : Error {
  explicit NumericalError(const std::string& msg) : Error(msg) {}
};

}  // namespace adw
