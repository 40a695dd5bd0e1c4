#ifndef WFADIS_ERRORS_HPP_
#define WFADIS_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wfadis {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (kind mismatch, unknown label,
// non-trim input where trim is required, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperation : public Error {
 public:
  using Error::Error;
};

// Malformed automaton or relation text. line() is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string &what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A subset construction outgrew its state budget.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string &what, std::size_t limit)
      : Error(what), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

class NotPredisambiguable : public LimitExceeded {
 public:
  explicit NotPredisambiguable(std::size_t limit)
      : LimitExceeded("pre-disambiguation exceeded the state limit of " +
                          std::to_string(limit) +
                          " (input may not be pre-disambiguable)",
                      limit) {}
};

class NotDeterminizedWithinLimit : public LimitExceeded {
 public:
  explicit NotDeterminizedWithinLimit(std::size_t limit)
      : LimitExceeded("determinization exceeded the state limit of " +
                          std::to_string(limit) +
                          " (input may not be determinizable)",
                      limit) {}
};

}  // namespace wfadis

#endif  // WFADIS_ERRORS_HPP_
