#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rschur {

/// Vector or matrix sizes that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A shifted core θI + X (or θI + Λ) has a zero pivot.
class SingularShiftError : public std::runtime_error {
 public:
  SingularShiftError(std::size_t index, const std::string& what)
      : std::runtime_error(what), index_(index) {}

  /// Position of the offending diagonal entry or pair.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Requested dense work exceeds the configured size guard.
class SizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed vector file or report.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline void require_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(want) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace detail
}  // namespace rschur
