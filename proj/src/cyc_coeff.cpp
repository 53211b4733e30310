#include "qseries/cyc_coeff.hpp"

#include <stdexcept>

namespace qseries {

CycCoeff::CycCoeff(int order) {
  if (order < 2) throw std::invalid_argument("cyclotomic order must be at least 2");
  vec_.resize(static_cast<std::size_t>(order - 1));
}

CycCoeff CycCoeff::monomial(int order, const Integer& c, std::int64_t k) {
  std::vector<Integer> poly(static_cast<std::size_t>(order));
  const std::int64_t r = ((k % order) + order) % order;
  poly[static_cast<std::size_t>(r)] = c;
  return cyc_reduce(order, poly);
}

CycCoeff CycCoeff::integer(int order, const Integer& n) {
  CycCoeff z(order);
  z.vec_[0] = n;
  return z;
}

bool CycCoeff::is_zero() const {
  for (const auto& v : vec_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

std::optional<Integer> CycCoeff::as_integer() const {
  for (std::size_t i = 1; i < vec_.size(); ++i) {
    if (sgn(vec_[i]) != 0) return std::nullopt;
  }
  return vec_.empty() ? Integer(0) : vec_[0];
}

CycCoeff& CycCoeff::operator+=(const CycCoeff& o) {
  if (vec_.empty()) {
    vec_ = o.vec_;
    return *this;
  }
  if (o.vec_.size() != vec_.size()) throw std::invalid_argument("mixed cyclotomic orders");
  for (std::size_t i = 0; i < vec_.size(); ++i) vec_[i] += o.vec_[i];
  return *this;
}

CycCoeff operator*(const CycCoeff& a, const CycCoeff& b) {
  if (a.vec_.size() != b.vec_.size()) throw std::invalid_argument("mixed cyclotomic orders");
  std::vector<Integer> poly(2 * a.vec_.size());
  for (std::size_t u = 0; u < a.vec_.size(); ++u) {
    if (sgn(a.vec_[u]) == 0) continue;
    for (std::size_t v = 0; v < b.vec_.size(); ++v) {
      mpz_addmul(poly[u + v].get_mpz_t(), a.vec_[u].get_mpz_t(), b.vec_[v].get_mpz_t());
    }
  }
  return cyc_reduce(a.order(), poly);
}

CycCoeff cyc_reduce(int order, std::span<const Integer> poly) {
  const auto n = static_cast<std::size_t>(order);
  // Fold modulo x^N - 1 first, then eliminate w^(N-1) with Phi_N.
  std::vector<Integer> folded(n);
  for (std::size_t i = 0; i < poly.size(); ++i) folded[i % n] += poly[i];
  CycCoeff out(order);
  const Integer& top = folded[n - 1];
  for (std::size_t i = 0; i + 1 < n; ++i) out.vec_[i] = folded[i] - top;
  return out;
}

}  // namespace qseries
