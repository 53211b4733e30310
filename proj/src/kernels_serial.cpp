#include "qseries/kernels.hpp"

namespace qseries::kernels {

namespace {

// acc[u + v] += a[u] * b[v], skipping zero components.
void cyc_convolve(std::span<Integer> acc, std::span<const Integer> a, std::span<const Integer> b) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (sgn(a[u]) == 0) continue;
    for (std::size_t v = 0; v < b.size(); ++v) {
      if (sgn(b[v]) == 0) continue;
      mpz_addmul(acc[u + v].get_mpz_t(), a[u].get_mpz_t(), b[v].get_mpz_t());
    }
  }
}

}  // namespace

std::vector<Integer> mul_serial(std::span<const Term> a, std::span<const Term> b, std::int64_t trunc) {
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
  for (const auto& x : a) {
    if (x.exponent >= trunc) break;
    for (const auto& y : b) {
      const std::int64_t e = x.exponent + y.exponent;
      if (e >= trunc) break;
      mpz_addmul(c[static_cast<std::size_t>(e)].get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
    }
  }
  return c;
}

std::vector<CycCoeff> cyc_mul_serial(std::span<const CycTerm> a, std::span<const CycTerm> b,
                                     std::int64_t trunc, int order) {
  const std::size_t width = 2 * static_cast<std::size_t>(order) - 3;
  std::vector<Integer> acc(static_cast<std::size_t>(trunc) * width);
  for (const auto& x : a) {
    if (x.exponent >= trunc) break;
    for (const auto& y : b) {
      const std::int64_t e = x.exponent + y.exponent;
      if (e >= trunc) break;
      cyc_convolve(std::span(acc).subspan(static_cast<std::size_t>(e) * width, width), x.coeff.vec(),
                   y.coeff.vec());
    }
  }
  std::vector<CycCoeff> out;
  out.reserve(static_cast<std::size_t>(trunc));
  for (std::int64_t e = 0; e < trunc; ++e) {
    out.push_back(cyc_reduce(order, std::span<const Integer>(acc).subspan(static_cast<std::size_t>(e) * width, width)));
  }
  return out;
}

}  // namespace qseries::kernels
