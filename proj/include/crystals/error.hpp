#pragma once

#include <stdexcept>
#include <string>

namespace crystals {

/// Malformed user input (type strings, weights, ids, words). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed inside a construction. Reaching one of these
/// means the input was not a normal crystal or an algorithm is wrong.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace crystals
