#ifndef BGRIP_ERRORS_HPP
#define BGRIP_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bgrip {

/// Base of every recoverable modelling error. The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotBistable : public DomainError {
public:
  NotBistable() : DomainError("design is not bistable") {}
  explicit NotBistable(const std::string &what) : DomainError(what) {}
};

class NonConvergence : public DomainError {
public:
  using DomainError::DomainError;
};

class StepSizeError : public DomainError {
public:
  using DomainError::DomainError;
};

class SaddleOrderError : public DomainError {
public:
  using DomainError::DomainError;
};

class TargetUnreachable : public DomainError {
public:
  using DomainError::DomainError;
};

class BudgetExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

class ObjectTooLarge : public DomainError {
public:
  using DomainError::DomainError;
};

class EmptyData : public DomainError {
public:
  using DomainError::DomainError;
};

/// Fiber stretch outside the range where the hyperelastic law is trusted.
class ConstitutiveRangeError : public DomainError {
public:
  using DomainError::DomainError;
};

/// Caller broke a documented precondition (sizes, ranges).
class ContractViolation : public DomainError {
public:
  using DomainError::DomainError;
};

/// A configuration document with one or more problems, all collected.
class ConfigError : public DomainError {
public:
  explicit ConfigError(std::vector<std::string> errors)
      : DomainError(join(errors)), errors_(std::move(errors)) {}
  [[nodiscard]] const std::vector<std::string> &errors() const { return errors_; }

private:
  static std::string join(const std::vector<std::string> &errs) {
    std::string out = "invalid configuration:";
    for (const auto &e : errs)
      out += "\n  " + e;
    return out;
  }
  std::vector<std::string> errors_;
};

} // namespace bgrip

#endif // BGRIP_ERRORS_HPP
