#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseries/errors.hpp"

namespace qseries {

using Integer = mpz_class;

struct Term {
  std::int64_t exponent;
  Integer coeff;
};

inline bool operator==(const Term& a, const Term& b) {
  return a.exponent == b.exponent && a.coeff == b.coeff;
}

/// Positive rational exponent num/den, used for monomials q^(num/den).
struct QExponent {
  std::int64_t num;
  std::int64_t den = 1;

  /// Raw exponent at the given scale; throws IncompatibleScale if not integral.
  std::int64_t at_scale(std::int64_t scale) const;
};

/// Truncated formal power series in q with exact integer coefficients.
///
/// Exponents are stored as integers e meaning q^(e/scale). The series is known
/// exactly for every exponent e < trunc and nothing is claimed beyond that.
/// Terms are kept sorted by exponent with zero coefficients pruned, so two
/// series with the same scale and trunc are equal iff their term lists match.
class ScaledSeries {
 public:
  /// Zero series at scale 1 with trunc 0 (knows nothing).
  ScaledSeries() = default;
  /// Zero series known up to trunc.
  ScaledSeries(std::int64_t scale, std::int64_t trunc);

  /// Builds a series from arbitrary terms: sorts, merges duplicates, drops
  /// zeros and terms at or beyond trunc. Negative exponents are rejected.
  static ScaledSeries from_terms(std::int64_t scale, std::int64_t trunc, std::vector<Term> terms);
  /// Dense coefficient vector, index = raw exponent. trunc = dense.size().
  static ScaledSeries from_dense(std::int64_t scale, std::vector<Integer> dense);
  static ScaledSeries constant(const Integer& c, std::int64_t scale, std::int64_t trunc);
  static ScaledSeries monomial(const Integer& c, std::int64_t exponent, std::int64_t scale,
                               std::int64_t trunc);

  std::int64_t scale() const { return scale_; }
  std::int64_t trunc() const { return trunc_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent with a nonzero coefficient, if any below trunc.
  std::optional<std::int64_t> valuation() const;
  /// Coefficient of q^(e/scale); zero when absent.
  Integer coeff(std::int64_t e) const;
  /// Coefficients 0..trunc-1 as a dense vector.
  std::vector<Integer> dense() const;

  /// Same series with trunc lowered to min(trunc, t).
  ScaledSeries truncated(std::int64_t t) const;

  /// Field-by-field identity (scale, trunc and terms).
  bool identical(const ScaledSeries& other) const;

  ScaledSeries operator-() const;
  ScaledSeries& operator*=(const Integer& c);

 private:
  std::int64_t scale_ = 1;
  std::int64_t trunc_ = 0;
  std::vector<Term> terms_;
};

/// Equality after rescaling both to the least common denominator and
/// truncating both to the smaller common precision.
bool operator==(const ScaledSeries& a, const ScaledSeries& b);

ScaledSeries add(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries sub(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries mul(const ScaledSeries& a, const ScaledSeries& b);
ScaledSeries scalar_mul(const ScaledSeries& a, const Integer& c);

/// Exact quotient a/b by long division. The result is known below
/// min(a.trunc, b.trunc) - valuation(b) after scale reconciliation.
ScaledSeries div(const ScaledSeries& a, const ScaledSeries& b);

/// a^k by binary exponentiation; a^0 is 1 at a's scale and trunc.
ScaledSeries pow(const ScaledSeries& a, unsigned k);

/// Re-expresses a at denominator new_scale. Upscaling always succeeds;
/// downscaling requires every exponent to be divisible by the reduction factor.
ScaledSeries rescale(const ScaledSeries& a, std::int64_t new_scale);

/// Extracts the residue class r mod n of the raw exponents of a.
///
/// Writing t = q^(1/scale), a = sum_r t^r S_r(t^n); the result is S_r(t^n)
/// expressed as a q-series at the smallest scale that represents it. For a at
/// scale n this is S_r(q) at scale 1, i.e. exponents re-indexed to (e - r)/n.
ScaledSeries multisect(const ScaledSeries& a, std::int64_t n, std::int64_t r);

/// Substitutes q -> q^(s) for a positive rational s. Coefficients are
/// untouched; only the exponent lattice changes.
ScaledSeries substitute_power(const ScaledSeries& a, QExponent s);

/// Lowest exponent at which a and b differ (after reconciliation), if any.
std::optional<std::int64_t> first_difference(const ScaledSeries& a, const ScaledSeries& b);

inline ScaledSeries operator+(const ScaledSeries& a, const ScaledSeries& b) { return add(a, b); }
inline ScaledSeries operator-(const ScaledSeries& a, const ScaledSeries& b) { return sub(a, b); }
inline ScaledSeries operator*(const ScaledSeries& a, const ScaledSeries& b) { return mul(a, b); }
inline ScaledSeries operator/(const ScaledSeries& a, const ScaledSeries& b) { return div(a, b); }
inline ScaledSeries operator*(const Integer& c, const ScaledSeries& a) { return scalar_mul(a, c); }

/// Outcome of comparing two independently computed sides of an identity.
struct Verdict {
  bool pass = false;
  ScaledSeries residual;  ///< lhs - rhs
  std::optional<std::int64_t> first_bad_exponent;
};

/// Exact coefficient comparison; pass iff lhs - rhs vanishes up to the common trunc.
Verdict compare(const ScaledSeries& lhs, const ScaledSeries& rhs);

/// Human-readable rendering, e.g. "1 - q - q^2 + q^(1/5) + O(q^3)".
std::string to_string(const ScaledSeries& a, std::size_t max_terms = 0);

}  // namespace qseries
