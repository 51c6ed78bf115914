#pragma once

#include <stdexcept>
#include <string>

namespace trotter {

// Bad arguments from the caller (maps to exit code 2 in the CLI).
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operand shapes do not match, or a dense cap was exceeded.
struct dimension_error : input_error {
  using input_error::input_error;
};

// A checked post-condition failed (exit code 1).
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace trotter
