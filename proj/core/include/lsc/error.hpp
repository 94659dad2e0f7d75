#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (out-of-range id, bad size...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list input. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Power iteration did not settle within the iteration budget. The last
/// iterate is kept so a caller can decide to use it anyway.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> iterate,
                   double eigenvalue, std::size_t iterations)
      : Error(what),
        iterate_(std::move(iterate)),
        eigenvalue_(eigenvalue),
        iterations_(iterations) {}

  const std::vector<double>& iterate() const noexcept { return iterate_; }
  double eigenvalue() const noexcept { return eigenvalue_; }
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> iterate_;
  double eigenvalue_;
  std::size_t iterations_;
};

}  // namespace lsc
