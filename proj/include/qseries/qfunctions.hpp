#pragma once

#include <cstdint>

#include "qseries/series.hpp"

namespace qseries {

/// Monomial argument sign * q^exponent for the Ramanujan theta function.
struct ThetaArg {
  int sign = -1;
  QExponent exponent;
};

/// (q^s)_inf from the pentagonal number theorem: sum_m (-1)^m q^(s m(3m-1)/2).
ScaledSeries euler_series(QExponent s, std::int64_t trunc, std::int64_t scale = 1);

/// (x; y)_inf = prod_{n>=0} (1 - x y^n) for monomials x = sx q^ex, y = sy q^ey (ey > 0).
ScaledSeries qpochhammer(int x_sign, QExponent x_exp, int y_sign, QExponent y_exp, std::int64_t trunc,
                         std::int64_t scale = 1);

/// f(a,b) = sum_{n in Z} a^(n(n+1)/2) b^(n(n-1)/2), summed directly.
ScaledSeries theta_sum(const ThetaArg& a, const ThetaArg& b, std::int64_t trunc, std::int64_t scale = 1);

/// f(a,b) from the triple product (-a;ab)_inf (-b;ab)_inf (ab;ab)_inf.
ScaledSeries theta_product(const ThetaArg& a, const ThetaArg& b, std::int64_t trunc,
                           std::int64_t scale = 1);

struct IdentitySides {
  ScaledSeries lhs;
  ScaledSeries rhs;
};

/// Both sides of the quintuple product identity under q -> q^n, a -> -q^A.
/// Requires 0 < 2A < n so every product factor is a power series.
IdentitySides quintuple_sides(std::int64_t n, std::int64_t a, std::int64_t trunc);
Verdict quintuple_check(std::int64_t n, std::int64_t a, std::int64_t trunc);

/// sum_{n>=0} (-1)^n (2n+1) q^(n(n+1)/2), which equals (q)_inf^3.
ScaledSeries jacobi_cube(std::int64_t trunc);

/// 1/(q)_inf; the coefficient of q^n is p(n).
ScaledSeries partition_series(std::int64_t trunc);

}  // namespace qseries
