#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qseries/cyc_coeff.hpp"
#include "qseries/multisection.hpp"
#include "qseries/qfunctions.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Truncated series with coefficients in Z[w]; same exponent conventions as ScaledSeries.
class CycSeries {
 public:
  CycSeries(int order, std::int64_t scale, std::int64_t trunc);

  /// Dense coefficients indexed by raw exponent; zeros are pruned.
  static CycSeries from_dense(int order, std::int64_t scale, std::vector<CycCoeff> dense);
  /// Integer series viewed inside Z[w].
  static CycSeries embed(const ScaledSeries& a, int order);

  int order() const { return order_; }
  std::int64_t scale() const { return scale_; }
  std::int64_t trunc() const { return trunc_; }
  std::span<const CycTerm> terms() const { return terms_; }

  /// True when every coefficient is a rational integer.
  bool is_rational() const;
  /// The integer series, or NonRationalCoefficient naming the first offending exponent.
  ScaledSeries to_integer_series() const;

 private:
  int order_;
  std::int64_t scale_;
  std::int64_t trunc_;
  std::vector<CycTerm> terms_;
};

/// Product in Z[w][[t]]; operands must share order and scale.
CycSeries cyc_mul(const CycSeries& a, const CycSeries& b);

/// Replaces t by w^p t, where t = q^(1/scale): c t^e becomes c w^(pe) t^e.
CycSeries omega_twist(const ScaledSeries& a, int order, std::int64_t p);

/// prod_{p=0}^{N-1} twist(a, p), multiplied sequentially with truncation after each step.
CycSeries twisted_product(const ScaledSeries& a, int order);

/// sum_k t^k J_k(t^N) at scale N, known below t^trunc_t.
ScaledSeries reassemble(std::span<const ScaledSeries> js, std::int64_t n, std::int64_t trunc_t);

/// Determinant of the circulant matrix M[i][j] = x[(i - j) mod n] by exact
/// cofactor expansion over column subsets. Intended for small n.
ScaledSeries circulant_determinant(std::span<const ScaledSeries> x);

struct ProductIdentityReport {
  std::int64_t trunc_t;   ///< truncation in t = q^(1/N) units
  std::int64_t trunc_q;   ///< truncation of the q-series comparisons
  IdentitySides product;        ///< prod_p (w^p t)_inf  vs  (q)^(N+1) / (q^N)
  IdentitySides eigen_product;  ///< prod_p sum_k w^(pk) t^k J_k  vs  (q)^(N+1) / (q^N)^(N+1)
  Verdict product_verdict;
  Verdict eigen_verdict;
  bool pass() const { return product_verdict.pass && eigen_verdict.pass; }
};

/// Root-of-unity product identity for (q^(1/N))_inf, evaluated in Z[w].
/// Throws NonRationalCoefficient if any cyclotomic component survives.
ProductIdentityReport product_identity_check(const PrimeContext& ctx, std::int64_t trunc_t);

}  // namespace qseries
