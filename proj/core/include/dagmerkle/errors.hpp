#pragma once

#include <stdexcept>

namespace dagmerkle {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DuplicateNodeError : Error {
  using Error::Error;
};

struct UnknownNodeError : Error {
  using Error::Error;
};

struct DuplicateElementError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct InconsistentCondensationError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace dagmerkle
