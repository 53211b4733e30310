#pragma once

// Truncated Cauchy-product kernels. Each kernel exists twice: a serial
// reference (a direct double loop over nonzero terms) and an OpenMP version
// that parallelizes over output exponents. Both return dense coefficient
// vectors of length `trunc`; callers prune zeros.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qseries/cyc_coeff.hpp"
#include "qseries/series.hpp"

namespace qseries::kernels {

std::vector<Integer> mul_serial(std::span<const Term> a, std::span<const Term> b, std::int64_t trunc);
std::vector<Integer> mul_parallel(std::span<const Term> a, std::span<const Term> b, std::int64_t trunc);

/// Coefficients of a cyclotomic series: `order` is the prime N.
std::vector<CycCoeff> cyc_mul_serial(std::span<const CycTerm> a, std::span<const CycTerm> b,
                                     std::int64_t trunc, int order);
std::vector<CycCoeff> cyc_mul_parallel(std::span<const CycTerm> a, std::span<const CycTerm> b,
                                       std::int64_t trunc, int order);

/// True when the parallel kernel is worth dispatching to for this product.
bool prefer_parallel(std::size_t nnz_a, std::size_t nnz_b, std::int64_t trunc);

/// Number of threads the parallel kernels would use.
int max_threads();

}  // namespace qseries::kernels
