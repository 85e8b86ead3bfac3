#pragma once

#include <stdexcept>
#include <string>

namespace qloop {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input, out-of-range argument, violated precondition.  The CLI
// maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// A mathematical check failed or an internal algebraic contract was violated
// (e.g. a division that must be exact left a remainder).  Exit code 1.
struct MathError : Error {
  using Error::Error;
};

// A rewriting budget was exhausted before the computation settled.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace qloop
