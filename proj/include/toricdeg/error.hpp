#pragma once

#include <stdexcept>
#include <string>

namespace toricdeg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation does not hold
/// (unbounded polytope, non-smooth vertex, non-exceptional generator, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed request data. `pointer` is a JSON pointer to the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer.empty() ? message : pointer + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace toricdeg
