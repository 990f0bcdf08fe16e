#pragma once

#include <stdexcept>
#include <string>

namespace donorthz {

// Invalid arguments, malformed files, unidentifiable fit problems.
// The CLI maps this to exit code 1.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to converge or lost accuracy.
// The CLI maps this to exit code 2.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace donorthz
