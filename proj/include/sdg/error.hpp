#ifndef SDG_ERROR_HPP
#define SDG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sdg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScopeError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InvalidOutcome : public Error {
 public:
  using Error::Error;
};

/// Raised when a query touches a generator assessment that does not avoid
/// non-positivity; its natural extension would be every gamble.
class IncoherentBase : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class FloatRejected : public ParseError {
 public:
  using ParseError::ParseError;
};

class ReferenceError : public Error {
 public:
  using Error::Error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

/// An operation was asked of a node that has no polyhedral representation
/// (strong products, conditional families).
class NotRepresentable : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure: a certificate did not verify, a theorem-backed
/// construction did not check out. Always an engine bug.
class EngineBug : public Error {
 public:
  using Error::Error;
};

}  // namespace sdg

#endif  // SDG_ERROR_HPP
