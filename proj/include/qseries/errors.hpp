#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroSeries : public Error {
 public:
  DivisionByZeroSeries() : Error("division by a series that vanishes up to its truncation order") {}
};

class NonIntegerQuotient : public Error {
 public:
  explicit NonIntegerQuotient(const std::string& what) : Error(what) {}
};

/// Exponents cannot be represented at the requested scale.
class IncompatibleScale : public Error {
 public:
  explicit IncompatibleScale(const std::string& what) : Error(what) {}
};

/// The dividend has lower valuation than the divisor, so the quotient is not a power series.
class NegativeValuation : public Error {
 public:
  explicit NegativeValuation(const std::string& what) : Error(what) {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long n) : Error("N = " + std::to_string(n) + " is not prime") {}
};

class UnsupportedPrime : public Error {
 public:
  explicit UnsupportedPrime(long long n)
      : Error("N = " + std::to_string(n) + " is prime but the expansion requires N > 3") {}
};

/// A coefficient of a cyclotomic series expected to be rational is not.
class NonRationalCoefficient : public Error {
 public:
  explicit NonRationalCoefficient(const std::string& what) : Error(what) {}
};

/// A quantity that theory guarantees (integrality, sign) came out wrong.
class InternalInconsistency : public Error {
 public:
  explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

class UnknownCheck : public Error {
 public:
  explicit UnknownCheck(const std::string& id) : Error("unknown identity check: " + id) {}
};

}  // namespace qseries
