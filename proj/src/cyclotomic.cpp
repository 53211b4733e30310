#include "qseries/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qseries/kernels.hpp"
#include "qseries/qfunctions.hpp"

namespace qseries {

CycSeries::CycSeries(int order, std::int64_t scale, std::int64_t trunc)
    : order_(order), scale_(scale), trunc_(trunc) {
  if (order < 2) throw std::invalid_argument("cyclotomic order must be at least 2");
  if (scale <= 0 || trunc < 0) throw std::invalid_argument("bad cyclotomic series shape");
}

CycSeries CycSeries::from_dense(int order, std::int64_t scale, std::vector<CycCoeff> dense) {
  CycSeries s(order, scale, static_cast<std::int64_t>(dense.size()));
  for (std::size_t e = 0; e < dense.size(); ++e) {
    if (!dense[e].is_zero()) s.terms_.push_back({static_cast<std::int64_t>(e), std::move(dense[e])});
  }
  return s;
}

CycSeries CycSeries::embed(const ScaledSeries& a, int order) {
  CycSeries s(order, a.scale(), a.trunc());
  for (const auto& t : a.terms()) s.terms_.push_back({t.exponent, CycCoeff::integer(order, t.coeff)});
  return s;
}

bool CycSeries::is_rational() const {
  for (const auto& t : terms_) {
    if (!t.coeff.as_integer()) return false;
  }
  return true;
}

ScaledSeries CycSeries::to_integer_series() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto n = t.coeff.as_integer();
    if (!n) {
      throw NonRationalCoefficient("coefficient at exponent " + std::to_string(t.exponent) + "/" +
                                   std::to_string(scale_) + " is not a rational integer");
    }
    out.push_back({t.exponent, std::move(*n)});
  }
  return ScaledSeries::from_terms(scale_, trunc_, std::move(out));
}

CycSeries cyc_mul(const CycSeries& a, const CycSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("mixed cyclotomic orders");
  if (a.scale() != b.scale()) throw IncompatibleScale("cyclotomic product needs a common scale");
  const std::int64_t t = std::min(a.trunc(), b.trunc());
  auto dense = kernels::prefer_parallel(a.terms().size(), b.terms().size(), t)
                   ? kernels::cyc_mul_parallel(a.terms(), b.terms(), t, a.order())
                   : kernels::cyc_mul_serial(a.terms(), b.terms(), t, a.order());
  return CycSeries::from_dense(a.order(), a.scale(), std::move(dense));
}

CycSeries omega_twist(const ScaledSeries& a, int order, std::int64_t p) {
  if (a.scale() != order) throw IncompatibleScale("twisting needs a series in t = q^(1/N), i.e. scale N");
  std::vector<CycCoeff> dense(static_cast<std::size_t>(a.trunc()), CycCoeff(order));
  for (const auto& t : a.terms()) {
    dense[static_cast<std::size_t>(t.exponent)] = CycCoeff::monomial(order, t.coeff, (p * t.exponent) % order);
  }
  return CycSeries::from_dense(order, a.scale(), std::move(dense));
}

CycSeries twisted_product(const ScaledSeries& a, int order) {
  std::vector<CycSeries> twists(static_cast<std::size_t>(order), CycSeries(order, a.scale(), 0));
#pragma omp parallel for
  for (int p = 0; p < order; ++p) twists[static_cast<std::size_t>(p)] = omega_twist(a, order, p);
  CycSeries product = twists.front();
  for (std::size_t p = 1; p < twists.size(); ++p) product = cyc_mul(product, twists[p]);
  return product;
}

ScaledSeries reassemble(std::span<const ScaledSeries> js, std::int64_t n, std::int64_t trunc_t) {
  ScaledSeries sum(n, trunc_t);
  for (std::size_t k = 0; k < js.size(); ++k) {
    if (js[k].is_zero()) continue;
    const ScaledSeries shift = ScaledSeries::monomial(1, static_cast<std::int64_t>(k), n, trunc_t);
    sum = add(sum, mul(shift, rescale(js[k], n).truncated(trunc_t)));
  }
  return sum.truncated(trunc_t);
}

ScaledSeries circulant_determinant(std::span<const ScaledSeries> x) {
  const std::size_t n = x.size();
  if (n == 0 || n > 20) throw std::invalid_argument("circulant size out of range");
  std::int64_t scale = x[0].scale();
  std::int64_t trunc = x[0].trunc();
  for (const auto& e : x) {
    if (e.scale() != scale) throw IncompatibleScale("circulant entries need a common scale");
    trunc = std::min(trunc, e.trunc());
  }
  // partial[mask]: signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<std::optional<ScaledSeries>> partial(std::size_t{1} << n);
  partial[0] = ScaledSeries::constant(1, scale, trunc);
  for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (!partial[mask] || partial[mask]->is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const ScaledSeries& entry = x[(row + n - col) % n];
      if (entry.is_zero()) continue;
      const int higher = __builtin_popcountll(mask >> (col + 1));
      ScaledSeries term = mul(*partial[mask], entry);
      if (higher % 2 != 0) term = -term;
      auto& slot = partial[mask | (std::size_t{1} << col)];
      slot = slot ? add(*slot, term) : term;
    }
  }
  return partial.back().value_or(ScaledSeries(scale, trunc));
}

ProductIdentityReport product_identity_check(const PrimeContext& ctx, std::int64_t trunc_t) {
  const std::int64_t n = ctx.n;
  const int order = static_cast<int>(n);
  const std::int64_t trunc_q = (trunc_t + n - 1) / n;
  ProductIdentityReport report{trunc_t, trunc_q, {}, {}, {}, {}};

  auto to_q = [&](const CycSeries& product) {
    ScaledSeries integral = product.to_integer_series();
    for (const auto& t : integral.terms()) {
      if (t.exponent % n != 0) {
        throw InternalInconsistency("twisted product has a term at fractional exponent " +
                                    std::to_string(t.exponent) + "/" + std::to_string(n));
      }
    }
    return rescale(integral, 1);
  };

  const ScaledSeries euler1 = euler_series({1}, trunc_q);
  const ScaledSeries euler_n = euler_series({n}, trunc_q);
  const ScaledSeries euler1_pow = pow(euler1, static_cast<unsigned>(n + 1));

  const ScaledSeries pent = pentagonal_root_series(ctx, trunc_q).truncated(trunc_t);
  report.product = {to_q(twisted_product(pent, order)), div(euler1_pow, euler_n)};
  report.product_verdict = compare(report.product.lhs, report.product.rhs);

  const auto js = j_oracle_all(ctx, trunc_q);
  const ScaledSeries x = reassemble(js, n, trunc_t);
  report.eigen_product = {to_q(twisted_product(x, order)),
                          div(euler1_pow, pow(euler_n, static_cast<unsigned>(n + 1)))};
  report.eigen_verdict = compare(report.eigen_product.lhs, report.eigen_product.rhs);
  return report;
}

}  // namespace qseries
