#include "qseries/qfunctions.hpp"

#include <stdexcept>

namespace qseries {

namespace {

// Visits every integer n with exponent(n) < limit, for a convex quadratic
// exponent. Walks outward from `start` in both directions and stops once the
// exponent has reached the limit and is no longer decreasing.
template <class Exponent, class Visit>
void for_each_below(std::int64_t start, std::int64_t limit, Exponent exponent, Visit visit) {
  for (std::int64_t n = start;; ++n) {
    const std::int64_t e = exponent(n);
    if (e < limit) {
      visit(n, e);
    } else if (exponent(n + 1) >= e) {
      break;
    }
  }
  for (std::int64_t n = start - 1;; --n) {
    const std::int64_t e = exponent(n);
    if (e < limit) {
      visit(n, e);
    } else if (exponent(n - 1) >= e) {
      break;
    }
  }
}

int parity_sign(int sign, std::int64_t power) {
  return (sign < 0 && (power % 2 != 0)) ? -1 : 1;
}

std::int64_t positive_raw(QExponent e, std::int64_t scale, const char* what) {
  const std::int64_t raw = e.at_scale(scale);
  if (raw <= 0) throw std::invalid_argument(std::string(what) + " exponent must be positive");
  return raw;
}

// d *= (1 + c q^e) in place, c = +-1.
void mul_binomial(std::vector<Integer>& d, int c, std::int64_t e) {
  const auto n = static_cast<std::int64_t>(d.size());
  if (e == 0) {
    if (c == -1) {
      for (auto& x : d) x = 0;
    } else {
      for (auto& x : d) x *= 2;
    }
    return;
  }
  for (std::int64_t k = n - 1; k >= e; --k) {
    if (c > 0) {
      d[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(k - e)];
    } else {
      d[static_cast<std::size_t>(k)] -= d[static_cast<std::size_t>(k - e)];
    }
  }
}

void accumulate_pochhammer(std::vector<Integer>& d, int x_sign, std::int64_t x_raw, int y_sign,
                           std::int64_t y_raw) {
  const auto limit = static_cast<std::int64_t>(d.size());
  for (std::int64_t n = 0; x_raw + n * y_raw < limit; ++n) {
    mul_binomial(d, -x_sign * parity_sign(y_sign, n), x_raw + n * y_raw);
  }
}

}  // namespace

ScaledSeries euler_series(QExponent s, std::int64_t trunc, std::int64_t scale) {
  const std::int64_t step = positive_raw(s, scale, "Euler function");
  std::vector<Term> terms;
  for_each_below(
      0, trunc, [step](std::int64_t m) { return step * (m * (3 * m - 1) / 2); },
      [&](std::int64_t m, std::int64_t e) { terms.push_back({e, m % 2 == 0 ? 1 : -1}); });
  return ScaledSeries::from_terms(scale, trunc, std::move(terms));
}

ScaledSeries qpochhammer(int x_sign, QExponent x_exp, int y_sign, QExponent y_exp, std::int64_t trunc,
                         std::int64_t scale) {
  const std::int64_t y_raw = positive_raw(y_exp, scale, "Pochhammer base");
  const std::int64_t x_raw = x_exp.at_scale(scale);
  if (x_raw < 0) throw std::invalid_argument("Pochhammer argument exponent must be non-negative");
  std::vector<Integer> d(static_cast<std::size_t>(trunc));
  if (trunc > 0) d[0] = 1;
  accumulate_pochhammer(d, x_sign, x_raw, y_sign, y_raw);
  return ScaledSeries::from_dense(scale, std::move(d));
}

ScaledSeries theta_sum(const ThetaArg& a, const ThetaArg& b, std::int64_t trunc, std::int64_t scale) {
  const std::int64_t ra = positive_raw(a.exponent, scale, "theta argument");
  const std::int64_t rb = positive_raw(b.exponent, scale, "theta argument");
  std::vector<Term> terms;
  for_each_below(
      0, trunc, [=](std::int64_t n) { return ra * (n * (n + 1) / 2) + rb * (n * (n - 1) / 2); },
      [&](std::int64_t n, std::int64_t e) {
        const int s = parity_sign(a.sign, n * (n + 1) / 2) * parity_sign(b.sign, n * (n - 1) / 2);
        terms.push_back({e, s});
      });
  return ScaledSeries::from_terms(scale, trunc, std::move(terms));
}

ScaledSeries theta_product(const ThetaArg& a, const ThetaArg& b, std::int64_t trunc, std::int64_t scale) {
  const std::int64_t ra = positive_raw(a.exponent, scale, "theta argument");
  const std::int64_t rb = positive_raw(b.exponent, scale, "theta argument");
  const int ab_sign = a.sign * b.sign;
  const std::int64_t ab_raw = ra + rb;
  std::vector<Integer> d(static_cast<std::size_t>(trunc));
  if (trunc > 0) d[0] = 1;
  accumulate_pochhammer(d, -a.sign, ra, ab_sign, ab_raw);
  accumulate_pochhammer(d, -b.sign, rb, ab_sign, ab_raw);
  accumulate_pochhammer(d, ab_sign, ab_raw, ab_sign, ab_raw);
  return ScaledSeries::from_dense(scale, std::move(d));
}

IdentitySides quintuple_sides(std::int64_t n, std::int64_t a, std::int64_t trunc) {
  if (n <= 0 || a <= 0 || 2 * a >= n) {
    throw std::invalid_argument("quintuple product needs 0 < 2A < N");
  }
  // Product side with Q = q^n and parameter -q^a:
  // (Q;Q) (a;Q) (a^-1 Q;Q) (a^2 Q;Q^2) (a^-2 Q;Q^2).
  std::vector<Integer> d(static_cast<std::size_t>(trunc));
  if (trunc > 0) d[0] = 1;
  accumulate_pochhammer(d, 1, n, 1, n);
  accumulate_pochhammer(d, -1, a, 1, n);
  accumulate_pochhammer(d, -1, n - a, 1, n);
  accumulate_pochhammer(d, 1, n + 2 * a, 1, 2 * n);
  accumulate_pochhammer(d, 1, n - 2 * a, 1, 2 * n);
  ScaledSeries lhs = ScaledSeries::from_dense(1, std::move(d));

  // Sum side: sum_k Q^(k(3k-1)/2) [param^(3k) - param^(1-3k)].
  std::vector<Term> terms;
  auto base = [n](std::int64_t k) { return n * (k * (3 * k - 1) / 2); };
  for_each_below(
      0, trunc, [&](std::int64_t k) { return base(k) + 3 * k * a; },
      [&](std::int64_t k, std::int64_t e) { terms.push_back({e, parity_sign(-1, 3 * k)}); });
  for_each_below(
      0, trunc, [&](std::int64_t k) { return base(k) + (1 - 3 * k) * a; },
      [&](std::int64_t k, std::int64_t e) { terms.push_back({e, -parity_sign(-1, 1 - 3 * k)}); });
  ScaledSeries rhs = ScaledSeries::from_terms(1, trunc, std::move(terms));
  return {std::move(lhs), std::move(rhs)};
}

Verdict quintuple_check(std::int64_t n, std::int64_t a, std::int64_t trunc) {
  auto [lhs, rhs] = quintuple_sides(n, a, trunc);
  return compare(lhs, rhs);
}

ScaledSeries jacobi_cube(std::int64_t trunc) {
  std::vector<Term> terms;
  for (std::int64_t n = 0; n * (n + 1) / 2 < trunc; ++n) {
    terms.push_back({n * (n + 1) / 2, Integer((n % 2 == 0 ? 1 : -1) * (2 * n + 1))});
  }
  return ScaledSeries::from_terms(1, trunc, std::move(terms));
}

ScaledSeries partition_series(std::int64_t trunc) {
  return div(ScaledSeries::constant(1, 1, trunc), euler_series({1}, trunc));
}

}  // namespace qseries
