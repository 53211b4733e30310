#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// Element of Z[w], w a primitive N-th root of unity for prime N.
///
/// Stored in the power basis {1, w, ..., w^(N-2)} of Z[x]/Phi_N(x). This basis
/// is a Z-basis, so the representation is unique: the element is a rational
/// integer n exactly when the vector is [n, 0, ..., 0].
class CycCoeff {
 public:
  CycCoeff() = default;
  /// Zero element of Z[w] for prime order N.
  explicit CycCoeff(int order);
  /// c * w^k, reduced.
  static CycCoeff monomial(int order, const Integer& c, std::int64_t k);
  /// Rational integer n embedded in Z[w].
  static CycCoeff integer(int order, const Integer& n);

  int order() const { return static_cast<int>(vec_.size()) + 1; }
  std::span<const Integer> vec() const { return vec_; }
  bool is_zero() const;
  /// The rational integer this element equals, if it is one.
  std::optional<Integer> as_integer() const;

  CycCoeff& operator+=(const CycCoeff& o);
  friend CycCoeff operator*(const CycCoeff& a, const CycCoeff& b);
  friend bool operator==(const CycCoeff& a, const CycCoeff& b) { return a.vec_ == b.vec_; }

 private:
  friend CycCoeff cyc_reduce(int order, std::span<const Integer> poly);
  std::vector<Integer> vec_;
};

/// Reduces an integer polynomial sum poly[i] w^i (any degree) to canonical form,
/// using w^N = 1 and w^(N-1) = -(1 + w + ... + w^(N-2)).
CycCoeff cyc_reduce(int order, std::span<const Integer> poly);

struct CycTerm {
  std::int64_t exponent;
  CycCoeff coeff;
};

}  // namespace qseries
