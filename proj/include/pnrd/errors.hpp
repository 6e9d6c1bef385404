#pragma once

#include <stdexcept>
#include <string>

namespace pnrd {

/// Validation errors reject malformed or inconsistent input data; computation
/// errors are raised when a well-formed input fails an algebraic check
/// (for instance a pencil determinant that is not a perfect square).
enum class ErrorKind { Validation, Computation };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error validation_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Validation, std::move(code), message);
}

inline Error computation_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Computation, std::move(code), message);
}

}  // namespace pnrd
