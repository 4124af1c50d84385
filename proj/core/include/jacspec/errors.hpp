#pragma once

#include <stdexcept>
#include <string>

namespace jacspec {

/// Bad parameters or violated type invariants. The CLI maps this to exit code 1.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Singular step, iteration cap exceeded, lost bracket and the like.
/// The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jacspec
