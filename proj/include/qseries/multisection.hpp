#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// A prime N > 3 written as N = |6m - 1|.
struct PrimeContext {
  std::int64_t n;
  std::int64_t m;
  std::int64_t abs_m;  ///< floor((N + 1) / 6)
};

bool is_prime(std::int64_t n);

/// Throws NotPrime or UnsupportedPrime (for 2 and 3).
PrimeContext prime_context(std::int64_t n);

enum class ClassGroup { Singleton, EvenGap, OddGap };

/// One class of residues a in [0, N-1] sharing a(3a-1)/2 mod N.
struct EquivClass {
  std::vector<std::int64_t> elements;  ///< ascending, one or two residues
  std::int64_t a_value;                ///< label A in [0, (N-1)/2]
  std::int64_t p;                      ///< common value of a(3a-1)/2 mod N
  ClassGroup group;
};

/// a(3a-1)/2 mod N, non-negative.
std::int64_t pentagonal_residue(std::int64_t a, std::int64_t n);

/// The (N+1)/2 classes, sorted by A.
std::vector<EquivClass> equivalence_classes(const PrimeContext& ctx);

/// (q^(1/N))_inf at scale N, known below q^(trunc_q).
ScaledSeries pentagonal_root_series(const PrimeContext& ctx, std::int64_t trunc_q);

/// J_r by brute force: multisect (q^(1/N))_inf by residue r and divide by (q^N)_inf.
/// Returns a scale-1 series known below q^trunc; zero when r carries no term.
ScaledSeries j_oracle(const PrimeContext& ctx, std::int64_t r, std::int64_t trunc);

/// All N oracle series J_0..J_{N-1}, computed from one pentagonal expansion.
std::vector<ScaledSeries> j_oracle_all(const PrimeContext& ctx, std::int64_t trunc);

/// Residues whose oracle J is nonzero below q^trunc.
std::set<std::int64_t> nonzero_support(const PrimeContext& ctx, std::int64_t trunc);

/// Truncation that makes zero-detection of every J conclusive: max(floor, 24N).
std::int64_t support_trunc(const PrimeContext& ctx, std::int64_t floor = 0);

}  // namespace qseries
