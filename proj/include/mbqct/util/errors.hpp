#pragma once

#include <stdexcept>
#include <string>

namespace mbqct {

// Thrown when an iterative numerical procedure fails to reach its target
// tolerance (quadrature refinement, crossing searches, ...).  The CLI maps
// this to exit code 2, all other input problems to exit code 1.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace mbqct
