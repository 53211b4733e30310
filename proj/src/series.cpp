#include "qseries/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qseries/kernels.hpp"

namespace qseries {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void check_shape(std::int64_t scale, std::int64_t trunc) {
  if (scale <= 0) throw std::invalid_argument("series scale must be positive");
  if (trunc < 0) throw std::invalid_argument("series trunc must be non-negative");
}

std::vector<Term> prune(std::vector<Integer>& dense) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (sgn(dense[i]) != 0) out.push_back({static_cast<std::int64_t>(i), std::move(dense[i])});
  }
  return out;
}

std::pair<ScaledSeries, ScaledSeries> reconcile(const ScaledSeries& a, const ScaledSeries& b) {
  if (a.scale() == b.scale()) return {a, b};
  const std::int64_t l = std::lcm(a.scale(), b.scale());
  return {rescale(a, l), rescale(b, l)};
}

std::string exponent_text(std::int64_t e, std::int64_t scale) {
  const std::int64_t g = std::gcd(e, scale);
  const std::int64_t num = e / g;
  const std::int64_t den = scale / g;
  if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

}  // namespace

std::int64_t QExponent::at_scale(std::int64_t scale) const {
  if (den <= 0) throw std::invalid_argument("exponent denominator must be positive");
  if ((num * scale) % den != 0) {
    throw IncompatibleScale("exponent " + std::to_string(num) + "/" + std::to_string(den) +
                            " is not representable at scale " + std::to_string(scale));
  }
  return num * scale / den;
}

ScaledSeries::ScaledSeries(std::int64_t scale, std::int64_t trunc) : scale_(scale), trunc_(trunc) {
  check_shape(scale, trunc);
}

ScaledSeries ScaledSeries::from_terms(std::int64_t scale, std::int64_t trunc, std::vector<Term> terms) {
  ScaledSeries s(scale, trunc);
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
  for (auto& t : terms) {
    if (t.exponent < 0) throw std::invalid_argument("negative exponent in power series");
    if (t.exponent >= trunc) break;
    if (!s.terms_.empty() && s.terms_.back().exponent == t.exponent) {
      s.terms_.back().coeff += t.coeff;
      if (sgn(s.terms_.back().coeff) == 0) s.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      s.terms_.push_back(std::move(t));
    }
  }
  return s;
}

ScaledSeries ScaledSeries::from_dense(std::int64_t scale, std::vector<Integer> dense) {
  ScaledSeries s(scale, static_cast<std::int64_t>(dense.size()));
  s.terms_ = prune(dense);
  return s;
}

ScaledSeries ScaledSeries::constant(const Integer& c, std::int64_t scale, std::int64_t trunc) {
  return monomial(c, 0, scale, trunc);
}

ScaledSeries ScaledSeries::monomial(const Integer& c, std::int64_t exponent, std::int64_t scale,
                                    std::int64_t trunc) {
  return from_terms(scale, trunc, {Term{exponent, c}});
}

std::optional<std::int64_t> ScaledSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

Integer ScaledSeries::coeff(std::int64_t e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int64_t x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return 0;
}

std::vector<Integer> ScaledSeries::dense() const {
  std::vector<Integer> out(static_cast<std::size_t>(trunc_));
  for (const auto& t : terms_) out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  return out;
}

ScaledSeries ScaledSeries::truncated(std::int64_t t) const {
  if (t >= trunc_) return *this;
  ScaledSeries s(scale_, std::max<std::int64_t>(t, 0));
  for (const auto& term : terms_) {
    if (term.exponent >= s.trunc_) break;
    s.terms_.push_back(term);
  }
  return s;
}

bool ScaledSeries::identical(const ScaledSeries& other) const {
  return scale_ == other.scale_ && trunc_ == other.trunc_ && terms_ == other.terms_;
}

ScaledSeries ScaledSeries::operator-() const {
  ScaledSeries s = *this;
  for (auto& t : s.terms_) t.coeff = -t.coeff;
  return s;
}

ScaledSeries& ScaledSeries::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

bool operator==(const ScaledSeries& a, const ScaledSeries& b) { return !first_difference(a, b); }

std::optional<std::int64_t> first_difference(const ScaledSeries& a, const ScaledSeries& b) {
  auto [x, y] = reconcile(a, b);
  const std::int64_t t = std::min(x.trunc(), y.trunc());
  auto xs = x.terms();
  auto ys = y.terms();
  std::size_t i = 0, j = 0;
  while (true) {
    const bool xe = i == xs.size() || xs[i].exponent >= t;
    const bool ye = j == ys.size() || ys[j].exponent >= t;
    if (xe && ye) return std::nullopt;
    if (ye || (!xe && xs[i].exponent < ys[j].exponent)) return xs[i].exponent;
    if (xe || ys[j].exponent < xs[i].exponent) return ys[j].exponent;
    if (xs[i].coeff != ys[j].coeff) return xs[i].exponent;
    ++i;
    ++j;
  }
}

ScaledSeries add(const ScaledSeries& a, const ScaledSeries& b) {
  auto [x, y] = reconcile(a, b);
  const std::int64_t t = std::min(x.trunc(), y.trunc());
  std::vector<Term> terms(x.terms().begin(), x.terms().end());
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return ScaledSeries::from_terms(x.scale(), t, std::move(terms));
}

ScaledSeries sub(const ScaledSeries& a, const ScaledSeries& b) { return add(a, -b); }

ScaledSeries scalar_mul(const ScaledSeries& a, const Integer& c) {
  ScaledSeries s = a;
  s *= c;
  return s;
}

ScaledSeries mul(const ScaledSeries& a, const ScaledSeries& b) {
  auto [x, y] = reconcile(a, b);
  const std::int64_t t = std::min(x.trunc(), y.trunc());
  auto dense = kernels::prefer_parallel(x.size(), y.size(), t)
                   ? kernels::mul_parallel(x.terms(), y.terms(), t)
                   : kernels::mul_serial(x.terms(), y.terms(), t);
  return ScaledSeries::from_dense(x.scale(), std::move(dense));
}

ScaledSeries div(const ScaledSeries& a, const ScaledSeries& b) {
  auto [x, y] = reconcile(a, b);
  const std::int64_t t = std::min(x.trunc(), y.trunc());
  const ScaledSeries divisor = y.truncated(t);
  const auto v = divisor.valuation();
  if (!v) throw DivisionByZeroSeries();
  const ScaledSeries dividend = x.truncated(t);
  if (auto va = dividend.valuation(); va && *va < *v) {
    throw NegativeValuation("dividend valuation " + std::to_string(*va) +
                            " is below divisor valuation " + std::to_string(*v));
  }
  const std::int64_t result_trunc = t - *v;
  const Integer lead = divisor.terms().front().coeff;
  const auto tail = divisor.terms().subspan(1);

  std::vector<Integer> rem = dividend.dense();
  std::vector<Integer> quot(static_cast<std::size_t>(result_trunc));
  for (std::int64_t k = 0; k < result_trunc; ++k) {
    Integer& r = rem[static_cast<std::size_t>(k + *v)];
    if (sgn(r) == 0) continue;
    if (!mpz_divisible_p(r.get_mpz_t(), lead.get_mpz_t())) {
      throw NonIntegerQuotient("quotient coefficient at exponent " + std::to_string(k) +
                               " is not an integer");
    }
    Integer& qk = quot[static_cast<std::size_t>(k)];
    mpz_divexact(qk.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t());
    for (const auto& term : tail) {
      const std::int64_t idx = k + term.exponent;
      if (idx >= t) break;
      mpz_submul(rem[static_cast<std::size_t>(idx)].get_mpz_t(), qk.get_mpz_t(),
                 term.coeff.get_mpz_t());
    }
  }
  return ScaledSeries::from_dense(x.scale(), std::move(quot));
}

ScaledSeries pow(const ScaledSeries& a, unsigned k) {
  ScaledSeries result = ScaledSeries::constant(1, a.scale(), a.trunc());
  ScaledSeries base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

ScaledSeries rescale(const ScaledSeries& a, std::int64_t new_scale) {
  if (new_scale <= 0) throw std::invalid_argument("scale must be positive");
  if (new_scale == a.scale()) return a;
  const std::int64_t s = a.scale();
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) {
    const std::int64_t num = t.exponent * new_scale;
    if (num % s != 0) {
      throw IncompatibleScale("exponent " + std::to_string(t.exponent) + "/" + std::to_string(s) +
                              " is not representable at scale " + std::to_string(new_scale));
    }
    terms.push_back({num / s, t.coeff});
  }
  return ScaledSeries::from_terms(new_scale, ceil_div(a.trunc() * new_scale, s), std::move(terms));
}

ScaledSeries multisect(const ScaledSeries& a, std::int64_t n, std::int64_t r) {
  if (n <= 0) throw std::invalid_argument("multisection modulus must be positive");
  if (r < 0 || r >= n) throw std::invalid_argument("residue out of range");
  const std::int64_t g = std::gcd(a.scale(), n);
  const std::int64_t out_scale = a.scale() / g;
  const std::int64_t step = n / g;
  std::vector<Term> terms;
  for (const auto& t : a.terms()) {
    if (t.exponent % n == r) terms.push_back({(t.exponent - r) / n * step, t.coeff});
  }
  const std::int64_t known = a.trunc() > r ? ceil_div(a.trunc() - r, n) : 0;
  return ScaledSeries::from_terms(out_scale, known * step, std::move(terms));
}

ScaledSeries substitute_power(const ScaledSeries& a, QExponent s) {
  if (s.num <= 0 || s.den <= 0) throw std::invalid_argument("substitution exponent must be positive");
  const std::int64_t g = std::gcd(s.num, s.den);
  const std::int64_t num = s.num / g;
  const std::int64_t den = s.den / g;
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (const auto& t : a.terms()) terms.push_back({t.exponent * num, t.coeff});
  return ScaledSeries::from_terms(a.scale() * den, a.trunc() * num, std::move(terms));
}

Verdict compare(const ScaledSeries& lhs, const ScaledSeries& rhs) {
  Verdict v;
  v.residual = sub(lhs, rhs);
  v.first_bad_exponent = v.residual.valuation();
  v.pass = !v.first_bad_exponent.has_value();
  return v;
}

std::string to_string(const ScaledSeries& a, std::size_t max_terms) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& t : a.terms()) {
    if (max_terms != 0 && shown == max_terms) {
      os << " + ...";
      break;
    }
    const bool neg = sgn(t.coeff) < 0;
    const Integer mag = abs(t.coeff);
    if (shown == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.exponent == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << exponent_text(t.exponent, a.scale());
    }
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(" << (a.trunc() == 0 ? std::string("1") : exponent_text(a.trunc(), a.scale())) << ")";
  return os.str();
}

}  // namespace qseries
