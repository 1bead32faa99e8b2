#pragma once

#include <stdexcept>
#include <string>

namespace planecol {

/// Base for all library-thrown failures; the CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

/// A search or growth guard tripped (component cap, step cap, enumeration cap).
struct CapExceededError : Error {
  using Error::Error;
};

/// The external oracle subprocess failed: spawn error, timeout, bad reply, EOF.
struct OracleProcessError : Error {
  using Error::Error;
};

}  // namespace planecol
