#ifndef ISOWORK_ERRORS_HPP
#define ISOWORK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isowork {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that violates a documented precondition (variables outside the
/// allowed set for a field, an empty interval, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text; `offset` is the byte position of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error("syntax error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A variable or function name outside the allowed sets.
class UnknownIdentifier : public Error {
 public:
  UnknownIdentifier(std::size_t offset, const std::string& name)
      : Error("unknown identifier '" + name + "' at offset " + std::to_string(offset)),
        offset_(offset),
        name_(name) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::size_t offset_;
  std::string name_;
};

/// Evaluation left the domain of an operation (log of a non-positive value,
/// division by zero, ...), or a variable was left unbound.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// x' + y' vanished where the isotropic completion divides by it.
class DegenerateTangent : public Error {
 public:
  using Error::Error;
};

/// Force or curve fails the isotropy admission test.
class NotIsotropic : public Error {
 public:
  NotIsotropic(double force_residual, double curve_residual);
  double force_residual() const noexcept { return force_residual_; }
  double curve_residual() const noexcept { return curve_residual_; }

 private:
  double force_residual_;
  double curve_residual_;
};

/// Case formula and direct quadrature disagree beyond the allowed band.
class CrossCheckFailure : public Error {
 public:
  CrossCheckFailure(double case_value, double direct_value, double allowed);
  double case_value() const noexcept { return case_value_; }
  double direct_value() const noexcept { return direct_value_; }

 private:
  double case_value_;
  double direct_value_;
};

/// An angle or parameter outside its admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// A plane work formula was requested for the wrong isotropy case.
class CaseMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace isowork

#endif  // ISOWORK_ERRORS_HPP
