#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tgembed {

/// Root of the library's exception hierarchy. Every error carries a short
/// machine-readable reason code next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message, std::string reason = "domain_error")
      : Error(std::move(reason), message) {}
};

/// A parameter record failed structural validation (e.g. unequal sums).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("validation_error", message) {}
};

/// The circle action has no effective quotient (all differences vanish).
class DegenerateActionError : public DomainError {
 public:
  explicit DegenerateActionError(const std::string& message)
      : DomainError(message, "degenerate_action") {}
};

class NotPositivelyCurvedError : public DomainError {
 public:
  explicit NotPositivelyCurvedError(const std::string& message)
      : DomainError(message, "not_positively_curved") {}
};

/// Input does not satisfy the oriented chain b3 <= b2 < a3 <= a2 <= a1 < b1.
class NormalFormError : public DomainError {
 public:
  explicit NormalFormError(const std::string& message) : DomainError(message, "not_normal_form") {}
};

class SingularCandidateError : public DomainError {
 public:
  explicit SingularCandidateError(const std::string& message)
      : DomainError(message, "singular_candidate") {}
};

/// Factorization gave up within the configured effort bound. Never raised
/// in place of a wrong answer.
class FactorizationIncomplete : public Error {
 public:
  FactorizationIncomplete(const std::string& message, std::string value)
      : Error("factorization_incomplete", message), value_(std::move(value)) {}

  /// Decimal representation of the cofactor that could not be split.
  const std::string& value() const noexcept { return value_; }

 private:
  std::string value_;
};

/// A mathematical invariant that must always hold was violated. Indicates a bug.
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& message) : Error("invariant_violation", message) {}
};

}  // namespace tgembed
