#pragma once

#include <stdexcept>
#include <string>

namespace binomrank {

// Thrown when a request exceeds a configured safety bound (brute-force
// solver width, exact binomial size, tuple materialization). Callers that
// want the work done anyway must raise the bound explicitly.
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binomrank
