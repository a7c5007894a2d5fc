#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ipfo {

// Error taxonomy; the C API and the CLI exit codes mirror these classes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed formula text. `pos` is a byte offset into the input.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p) : Error(msg), pos(p) {}
};

// Bad arguments: wrong arity, unknown names, invalid flags or config.
struct UsageError : Error {
  using Error::Error;
};

// Invalid model: bad file, out-of-range indices, duplicate entries, or a
// relation that fails the interval-preservation check.
struct ModelError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

}  // namespace ipfo
