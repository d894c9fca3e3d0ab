#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treeqaoa {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller supplied an argument outside the operation's domain.
class InvalidParameter : public Error {
  public:
    using Error::Error;
};

/// The request would exceed a configured memory or size cap.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// A NaN or infinity appeared where a finite value was required.
class NumericError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input. `line()` is 1-based; 0 when not line-oriented.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace treeqaoa
