#pragma once

#include <stdexcept>
#include <string>

namespace tf {

// Bad user input: malformed files, out-of-range parameters. CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result violated an invariant that must always hold. CLI exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tf
