#pragma once

#include <stdexcept>
#include <string>

namespace cogrowth {

// Raised when an internal consistency check fails. These indicate a bug,
// never bad user input; the CLI maps them to exit code 1.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string &what) : std::logic_error(what) {}
};

// Bad arguments: out-of-range parameters, malformed words, order mismatch.
// The CLI maps these to exit code 2.
class InvalidArgument : public std::invalid_argument {
public:
  explicit InvalidArgument(const std::string &what)
      : std::invalid_argument(what) {}
};

} // namespace cogrowth
