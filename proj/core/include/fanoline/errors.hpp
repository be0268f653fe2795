#ifndef FANOLINE_ERRORS_HPP
#define FANOLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fanoline {

/// Malformed user input: parse failures, unknown variables, bad file headers.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition does not hold (point off the scheme,
/// singular point, mismatched rings, unverified decomposition, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PointNotOnScheme : public DomainError {
 public:
  PointNotOnScheme() : DomainError("point not on scheme") {}
};

class SingularPoint : public DomainError {
 public:
  SingularPoint() : DomainError("point is singular on the scheme") {}
};

class RingMismatch : public DomainError {
 public:
  RingMismatch() : DomainError("polynomials live in different rings") {}
};

}  // namespace fanoline

#endif  // FANOLINE_ERRORS_HPP
