#include <omp.h>

#include <algorithm>

#include "qseries/kernels.hpp"

namespace qseries::kernels {

// Below this many term pairs the thread start-up cost dominates.
constexpr std::size_t kParallelPairs = 1u << 14;

int max_threads() { return omp_get_max_threads(); }

bool prefer_parallel(std::size_t nnz_a, std::size_t nnz_b, std::int64_t trunc) {
  if (max_threads() < 2) return false;
  const std::size_t pairs = nnz_a * nnz_b;
  if (pairs < kParallelPairs) return false;
  // The gather kernel walks every output slot against the sparser operand.
  const std::size_t gather = std::min(nnz_a, nnz_b) * static_cast<std::size_t>(trunc);
  return gather <= 8 * pairs;
}

std::vector<Integer> mul_parallel(std::span<const Term> a, std::span<const Term> b, std::int64_t trunc) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<Integer> dense_b(static_cast<std::size_t>(trunc));
  for (const auto& y : b) {
    if (y.exponent >= trunc) break;
    dense_b[static_cast<std::size_t>(y.exponent)] = y.coeff;
  }
  std::vector<Integer> c(static_cast<std::size_t>(trunc));
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t k = 0; k < trunc; ++k) {
    mpz_ptr out = c[static_cast<std::size_t>(k)].get_mpz_t();
    for (const auto& x : a) {
      if (x.exponent > k) break;
      const Integer& y = dense_b[static_cast<std::size_t>(k - x.exponent)];
      if (sgn(y) != 0) mpz_addmul(out, x.coeff.get_mpz_t(), y.get_mpz_t());
    }
  }
  return c;
}

std::vector<CycCoeff> cyc_mul_parallel(std::span<const CycTerm> a, std::span<const CycTerm> b,
                                       std::int64_t trunc, int order) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<const CycCoeff*> dense_b(static_cast<std::size_t>(trunc), nullptr);
  for (const auto& y : b) {
    if (y.exponent >= trunc) break;
    dense_b[static_cast<std::size_t>(y.exponent)] = &y.coeff;
  }
  const std::size_t width = 2 * static_cast<std::size_t>(order) - 3;
  std::vector<CycCoeff> out(static_cast<std::size_t>(trunc));
#pragma omp parallel
  {
    std::vector<Integer> acc(width);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < trunc; ++k) {
      for (auto& v : acc) v = 0;
      for (const auto& x : a) {
        if (x.exponent > k) break;
        const CycCoeff* y = dense_b[static_cast<std::size_t>(k - x.exponent)];
        if (y == nullptr) continue;
        auto xv = x.coeff.vec();
        auto yv = y->vec();
        for (std::size_t u = 0; u < xv.size(); ++u) {
          if (sgn(xv[u]) == 0) continue;
          for (std::size_t w = 0; w < yv.size(); ++w) {
            if (sgn(yv[w]) == 0) continue;
            mpz_addmul(acc[u + w].get_mpz_t(), xv[u].get_mpz_t(), yv[w].get_mpz_t());
          }
        }
      }
      out[static_cast<std::size_t>(k)] = cyc_reduce(order, acc);
    }
  }
  return out;
}

}  // namespace qseries::kernels
