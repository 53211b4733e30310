#include "qseries/multisection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qseries/qfunctions.hpp"

namespace qseries {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeContext prime_context(std::int64_t n) {
  if (!is_prime(n)) throw NotPrime(n);
  if (n <= 3) throw UnsupportedPrime(n);
  // N = 6m - 1 for N = 5 mod 6, N = 1 - 6m for N = 1 mod 6.
  const std::int64_t m = n % 6 == 5 ? (n + 1) / 6 : (1 - n) / 6;
  return {n, m, (n + 1) / 6};
}

std::int64_t pentagonal_residue(std::int64_t a, std::int64_t n) {
  const std::int64_t v = (a * (3 * a - 1) / 2) % n;
  return v < 0 ? v + n : v;
}

std::vector<EquivClass> equivalence_classes(const PrimeContext& ctx) {
  std::map<std::int64_t, std::vector<std::int64_t>> by_residue;
  for (std::int64_t a = 0; a < ctx.n; ++a) by_residue[pentagonal_residue(a, ctx.n)].push_back(a);

  std::vector<EquivClass> classes;
  for (auto& [p, elems] : by_residue) {
    EquivClass c{elems, 0, p, ClassGroup::Singleton};
    if (elems.size() == 2) {
      const std::int64_t gap = elems[1] - elems[0];
      if (gap % 2 == 0) {
        c.a_value = gap / 2;
        c.group = ClassGroup::EvenGap;
      } else {
        c.a_value = (ctx.n - gap) / 2;
        c.group = ClassGroup::OddGap;
      }
    } else if (elems.size() != 1) {
      throw InternalInconsistency("class with " + std::to_string(elems.size()) + " elements for N = " +
                                  std::to_string(ctx.n));
    }
    classes.push_back(std::move(c));
  }
  std::sort(classes.begin(), classes.end(),
            [](const EquivClass& x, const EquivClass& y) { return x.a_value < y.a_value; });
  return classes;
}

ScaledSeries pentagonal_root_series(const PrimeContext& ctx, std::int64_t trunc_q) {
  return euler_series({1, ctx.n}, trunc_q * ctx.n, ctx.n);
}

std::vector<ScaledSeries> j_oracle_all(const PrimeContext& ctx, std::int64_t trunc) {
  const ScaledSeries pent = pentagonal_root_series(ctx, trunc);
  const ScaledSeries euler_n = euler_series({ctx.n}, trunc);
  std::vector<ScaledSeries> out;
  out.reserve(static_cast<std::size_t>(ctx.n));
  for (std::int64_t r = 0; r < ctx.n; ++r) out.push_back(div(multisect(pent, ctx.n, r), euler_n));
  return out;
}

ScaledSeries j_oracle(const PrimeContext& ctx, std::int64_t r, std::int64_t trunc) {
  if (r < 0 || r >= ctx.n) throw std::invalid_argument("residue out of range");
  const ScaledSeries pent = pentagonal_root_series(ctx, trunc);
  return div(multisect(pent, ctx.n, r), euler_series({ctx.n}, trunc));
}

std::set<std::int64_t> nonzero_support(const PrimeContext& ctx, std::int64_t trunc) {
  std::set<std::int64_t> support;
  const auto js = j_oracle_all(ctx, trunc);
  for (std::int64_t r = 0; r < ctx.n; ++r) {
    if (!js[static_cast<std::size_t>(r)].is_zero()) support.insert(r);
  }
  return support;
}

std::int64_t support_trunc(const PrimeContext& ctx, std::int64_t floor) {
  return std::max(floor, 24 * ctx.n);
}

}  // namespace qseries
