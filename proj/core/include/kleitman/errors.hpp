#pragma once

#include <stdexcept>
#include <string>

namespace kleitman {

// Bad parameters, malformed input files, violated preconditions. CLI exit 1.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Instance too large for exact processing, I/O failure. CLI exit 2.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace kleitman
