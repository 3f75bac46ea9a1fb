#ifndef KRCHAR_ERRORS_HPP
#define KRCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace krchar {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad input: unknown Lie type, node out of range, malformed weight, ...
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An orbit, coset or term-count bound was hit. Never silently truncated.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// divide_exact was asked to divide by a binomial that does not divide.
class NotDivisible : public Error {
public:
  using Error::Error;
};

/// No polyhedral decomposition is registered for this (type, node).
class Unsupported : public Error {
public:
  using Error::Error;
};

/// A weight was not below the normalization base in the root-lattice order.
class NonIntegralShift : public Error {
public:
  using Error::Error;
};

/// Series inversion of a non-unit.
class NotInvertible : public Error {
public:
  using Error::Error;
};

/// Floating-point evaluation left the representable range.
class NumericOverflow : public Error {
public:
  using Error::Error;
};

/// A CheckedInt operation overflowed 64 bits.
class CoefficientOverflow : public Error {
public:
  CoefficientOverflow() : Error("64-bit coefficient overflow") {}
};

}  // namespace krchar

#endif
