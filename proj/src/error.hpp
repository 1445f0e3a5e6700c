#pragma once

#include <stdexcept>
#include <string>

namespace halfline {

// Iterative procedure failed to converge or lost accuracy.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// File or stream operation failed.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace halfline
