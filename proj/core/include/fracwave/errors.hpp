#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Gamma function evaluated at (or within tolerance of) a non-positive integer.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(what) {}
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A truncated series failed to meet its stopping criterion within kmax terms.
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& what) : Error(what) {}
};

/// Exact coefficient arithmetic exceeded the 64-bit rational range,
/// or an expansion exceeded the extended-basis cap.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// reduce_to_system called for an operator/basis pair that is not invariant.
class NotInvariantError : public Error {
 public:
  explicit NotInvariantError(const std::string& what) : Error(what) {}
};

/// Similarity solution requested at the divergent order alpha = 1/2.
class SingularAlphaError : public Error {
 public:
  explicit SingularAlphaError(const std::string& what) : Error(what) {}
};

/// Similarity solution requested at integer order (alpha = 1).
class IntegerAlphaError : public Error {
 public:
  explicit IntegerAlphaError(const std::string& what) : Error(what) {}
};

/// Operator coefficients violate the invariance condition required by a solution family.
class ConditionError : public Error {
 public:
  explicit ConditionError(const std::string& what) : Error(what) {}
};

/// Solution parameters degenerate (mu = 0 or C = 0): the oscillating branch collapses.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(what) {}
};

/// A sample point left the compact support of a solution during verification.
class SupportError : public Error {
 public:
  explicit SupportError(const std::string& what) : Error(what) {}
};

}  // namespace fracwave
