#pragma once

#include <stdexcept>
#include <string>

namespace pgd {

/// Input violates a documented precondition (bad generator, point outside X, ...).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive computation refused because the instance is larger than the guard.
class GuardExceeded : public DomainError {
public:
  using DomainError::DomainError;
};

class ParseError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A fitted series failed its verification margin.
class FitError : public DomainError {
public:
  FitError(const std::string& what, int degree)
    : DomainError(what), degree_(degree) {}
  int degree() const { return degree_; }

private:
  int degree_;
};

} // namespace pgd
