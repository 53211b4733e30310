#include "qseries/identities.hpp"

#include <algorithm>

#include "qseries/closed_form.hpp"
#include "qseries/cyclotomic.hpp"
#include "qseries/multisection.hpp"
#include "qseries/qfunctions.hpp"

namespace qseries {

namespace {

using Series = ScaledSeries;

Series q_pow(std::int64_t e, std::int64_t trunc, const Integer& c = 1) {
  return Series::monomial(c, e, 1, trunc);
}

// q^(k/n) as a series in t = q^(1/n), known below q^trunc.
Series t_pow(std::int64_t k, std::int64_t n, std::int64_t trunc, const Integer& c = 1) {
  return Series::monomial(c, k, n, trunc * n);
}

Series constant(const Integer& c, std::int64_t trunc) { return Series::constant(c, 1, trunc); }

// (q)_inf^a / (q^n)_inf^b
Series eta_ratio(std::int64_t n, unsigned a, unsigned b, std::int64_t trunc) {
  return div(pow(euler_series({1}, trunc), a), pow(euler_series({n}, trunc), b));
}

Series reduce_mod(const Series& s, long m) {
  std::vector<Term> out;
  for (const auto& t : s.terms()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), t.coeff.get_mpz_t(), static_cast<unsigned long>(m));
    out.push_back({t.exponent, r});
  }
  return Series::from_terms(s.scale(), s.trunc(), std::move(out));
}

// Powers J^0..J^k of one series, cached for the polynomial identities.
struct Powers {
  std::vector<Series> p;
  Powers(const Series& j, unsigned k) {
    p.push_back(constant(1, j.trunc()));
    for (unsigned i = 1; i <= k; ++i) p.push_back(mul(p.back(), j));
  }
  const Series& operator[](unsigned i) const { return p.at(i); }
};

std::vector<std::int64_t> primes_up_to(const CheckContext& c, std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (auto n : c.primes) {
    if (n <= limit) out.push_back(n);
  }
  return out;
}

std::string label_n(std::int64_t n) { return "N=" + std::to_string(n); }

// N = 5. In the expansion (q^(1/5))_inf / (q^5)_inf = J0 + q^(1/5) J1 + q^(2/5) J2
// Ramanujan's J1, J2 are our J0, J2, and J1 = -1.
struct Five {
  std::int64_t trunc;
  Series j0, j1, j2;
  explicit Five(std::int64_t t) : trunc(t) {
    auto js = j_oracle_all(prime_context(5), t);
    j0 = js[0];
    j1 = js[1];
    j2 = js[2];
  }
};

// N = 7. Ramanujan's J1, J2, J3 are our J0, J1, J5, and J2 = -1.
struct Seven {
  std::int64_t trunc;
  Series j0, j1, j2, j5;
  explicit Seven(std::int64_t t) : trunc(t) {
    auto js = j_oracle_all(prime_context(7), t);
    j0 = js[0];
    j1 = js[1];
    j2 = js[2];
    j5 = js[5];
  }
};

std::vector<Comparison> n5_expansion(const CheckContext& c) {
  const auto t = c.trunc;
  const auto ctx = prime_context(5);
  Five f(t);
  Series lhs = div(pentagonal_root_series(ctx, t), euler_series({5}, t));
  Series rhs = f.j0 + t_pow(1, 5, t, -1) + t_pow(2, 5, t) * f.j2;
  return {{"(q^(1/5))/(q^5) = J0 - q^(1/5) + q^(2/5) J2", lhs, rhs}};
}

std::vector<Comparison> n5_reciprocal(const CheckContext& c) {
  const auto t = c.trunc;
  Five f(t);
  Powers a(f.j0, 5), b(f.j2, 5);
  auto q = [t](std::int64_t e) { return q_pow(e, t); };
  auto x = [t](std::int64_t k) { return t_pow(k, 5, t); };
  Series lhs = div(t_pow(0, 5, t), a[1] + t_pow(1, 5, t, -1) + x(2) * b[1]);
  Series num = a[4] + Integer(3) * q(1) * b[1] + x(1) * (a[3] + Integer(2) * q(1) * b[2]) +
               x(2) * (Integer(2) * a[2] + q(1) * b[3]) + x(3) * (Integer(3) * a[1] + q(1) * b[4]) +
               t_pow(4, 5, t, 5);
  Series den = a[5] - q_pow(1, t, 11) + q(2) * b[5];
  return {{"1/(J0 - q^(1/5) + q^(2/5) J2) = rationalized form", lhs, div(num, den)}};
}

std::vector<Comparison> n5_jj(const CheckContext& c) {
  Five f(c.trunc);
  return {{"J0 J2 = -1", mul(f.j0, f.j2), constant(-1, c.trunc)},
          {"J1 = -1", f.j1, constant(-1, c.trunc)}};
}

std::vector<Comparison> n5_quintic(const CheckContext& c) {
  const auto t = c.trunc;
  Five f(t);
  Series lhs = pow(f.j0, 5) - q_pow(1, t, 11) + q_pow(2, t) * pow(f.j2, 5);
  return {{"J0^5 - 11q + q^2 J2^5 = (q)^6/(q^5)^6", lhs, eta_ratio(5, 6, 6, t)}};
}

std::vector<Comparison> n5_partition(const CheckContext& c) {
  const auto t = c.trunc;
  // 1/(q^(1/5))_inf, multisected at residue 4.
  Series root = substitute_power(partition_series(5 * t), {1, 5});
  Series lhs = multisect(root, 5, 4);
  Series rhs = Integer(5) * div(pow(euler_series({5}, t), 5), pow(euler_series({1}, t), 6));
  return {{"sum p(5n+4) q^n = 5 (q^5)^5/(q)^6", lhs, rhs},
          {"p(5n+4) = 0 mod 5", reduce_mod(lhs, 5), Series(1, t)}};
}

std::vector<Comparison> n5_det(const CheckContext& c) {
  const auto t = c.trunc;
  Five f(t);
  Powers a(f.j0, 5), b(f.j2, 5);
  Series inner = Integer(5) * a[1] * b[1] - constant(1, t) - Integer(5) * a[2] * b[2];
  Series lhs = a[5] + q_pow(1, t) * inner + q_pow(2, t) * b[5];
  return {{"circulant expansion = (q)^6/(q^5)^6", lhs, eta_ratio(5, 6, 6, t)}};
}

std::vector<Comparison> n7_expansion(const CheckContext& c) {
  const auto t = c.trunc;
  const auto ctx = prime_context(7);
  Seven s(t);
  Series lhs = div(pentagonal_root_series(ctx, t), euler_series({7}, t));
  Series rhs = s.j0 + t_pow(1, 7, t) * s.j1 + t_pow(2, 7, t, -1) + t_pow(5, 7, t) * s.j5;
  return {{"(q^(1/7))/(q^7) = J0 + q^(1/7) J1 - q^(2/7) + q^(5/7) J5", lhs, rhs}};
}

std::vector<Comparison> n7_jjj(const CheckContext& c) {
  Seven s(c.trunc);
  return {{"J0 J1 J5 = -1", s.j0 * s.j1 * s.j5, constant(-1, c.trunc)},
          {"J0 J1 J2 J5 = 1", s.j0 * s.j1 * s.j2 * s.j5, constant(1, c.trunc)}};
}

std::vector<Comparison> n7_det_expanded(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Powers a(s.j0, 7), b(s.j1, 7), d(s.j5, 7);
  auto q = [t](std::int64_t e) { return q_pow(e, t); };
  auto k = [](long v) { return Integer(v); };
  Series c1 = b[7] + k(7) * a[1] * b[5] + k(14) * a[2] * b[3] + k(7) * a[4] * b[2] * d[1] +
              k(7) * a[3] * b[1] + k(7) * a[5] * d[1];
  Series c2 = k(7) * a[1] * b[4] * d[2] + k(7) * b[3] * d[1] + k(7) * a[2] * b[2] * d[2] +
              k(14) * a[1] * b[1] * d[1] + k(14) * a[3] * d[2] - constant(1, t);
  Series c3 = k(14) * b[2] * d[3] + k(7) * a[2] * b[1] * d[4] + k(7) * a[1] * d[3];
  Series lhs = a[7] + q(1) * c1 + q(2) * c2 + q(3) * c3 + k(7) * q(4) * b[1] * d[5] + q(5) * d[7];
  return {{"7x7 circulant expansion = (q)^8/(q^7)^8", lhs, eta_ratio(7, 8, 8, t)}};
}

std::vector<Comparison> n7_det(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Powers a(s.j0, 7), b(s.j1, 7), d(s.j5, 7);
  auto q = [t](std::int64_t e) { return q_pow(e, t); };
  Series lhs = a[7] + q(1) * b[7] + q(5) * d[7] +
               Integer(7) * q(1) * (a[1] * b[5] + d[1] * a[5] + q(3) * b[1] * d[5]) +
               Integer(14) * q(1) * (a[2] * b[3] + q(1) * d[2] * a[3] + q(2) * b[2] * d[3]) -
               q_pow(2, t, 8);
  return {{"simplified circulant expansion = (q)^8/(q^7)^8", lhs, eta_ratio(7, 8, 8, t)}};
}

std::vector<Comparison> n7_id55a(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Series lhs = s.j0 * s.j0 * s.j5 + s.j1;
  Series rhs = q_pow(1, t) * s.j5 * s.j5;
  return {{"J0^2 J5 + J1 = q J5^2", lhs, rhs}};
}

std::vector<Comparison> n7_id55b(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Series lhs = pow(s.j0, 7) + q_pow(1, t) * pow(s.j1, 7) + q_pow(5, t) * pow(s.j5, 7);
  Series rhs = eta_ratio(7, 8, 8, t) + Integer(14) * q_pow(1, t) * eta_ratio(7, 4, 4, t) + q_pow(2, t, 57);
  return {{"J0^7 + q J1^7 + q^5 J5^7 = (q)^8/(q^7)^8 + 14q (q)^4/(q^7)^4 + 57q^2", lhs, rhs}};
}

std::vector<Comparison> n7_id55c(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Powers a(s.j0, 3), b(s.j1, 3), d(s.j5, 3);
  Series lhs = a[3] * b[1] + q_pow(1, t) * b[3] * d[1] + q_pow(2, t) * d[3] * a[1];
  Series rhs = -eta_ratio(7, 4, 4, t) - q_pow(1, t, 8);
  return {{"J0^3 J1 + q J1^3 J5 + q^2 J5^3 J0 = -(q)^4/(q^7)^4 - 8q", lhs, rhs}};
}

std::vector<Comparison> n7_id55d(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Powers a(s.j0, 3), b(s.j1, 3), d(s.j5, 3);
  Series lhs = a[2] * b[3] + q_pow(1, t) * d[2] * a[3] + q_pow(2, t) * b[2] * d[3];
  Series rhs = -eta_ratio(7, 4, 4, t) - q_pow(1, t, 5);
  return {{"J0^2 J1^3 + q J5^2 J0^3 + q^2 J1^2 J5^3 = -(q)^4/(q^7)^4 - 5q", lhs, rhs}};
}

std::vector<Comparison> n7_id56(const CheckContext& c) {
  const auto t = c.trunc;
  Seven s(t);
  Powers a(s.j0, 5), b(s.j1, 5), d(s.j5, 5);
  Series lhs = a[1] * b[5] + d[1] * a[5] + q_pow(3, t) * b[1] * d[5];
  return {{"J0 J1^5 + J5 J0^5 + q^3 J1 J5^5 = 3q", lhs, q_pow(1, t, 3)}};
}

std::vector<Comparison> theta_prodsum(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : primes_up_to(c, 13)) {
    for (const auto& form : closed_form_table(prime_context(n))) {
      if (!form.theta_num) continue;
      for (const auto& pair : {*form.theta_num, *form.theta_den}) {
        ThetaArg a{-1, {pair.first}}, b{-1, {pair.second}};
        out.push_back({label_n(n) + " f(-q^" + std::to_string(pair.first) + ",-q^" +
                           std::to_string(pair.second) + ")",
                       theta_sum(a, b, c.trunc), theta_product(a, b, c.trunc)});
      }
    }
  }
  return out;
}

std::vector<Comparison> quintuple(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : primes_up_to(c, 13)) {
    for (std::int64_t a = 1; 2 * a < n; ++a) {
      auto sides = quintuple_sides(n, a, c.trunc);
      out.push_back({label_n(n) + " A=" + std::to_string(a), sides.lhs, sides.rhs});
    }
  }
  return out;
}

std::vector<Comparison> jacobi(const CheckContext& c) {
  return {{"(q)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)", jacobi_cube(c.trunc),
           pow(euler_series({1}, c.trunc), 3)}};
}

// A set of residues as the series sum_{r in set} q^r, so set equality is series equality.
template <class Range>
Series indicator(const Range& residues, std::int64_t n) {
  std::vector<Term> terms;
  for (auto r : residues) terms.push_back({r, 1});
  return Series::from_terms(1, n, std::move(terms));
}

std::vector<Comparison> thm1_support(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : c.primes) {
    const auto ctx = prime_context(n);
    const auto support = nonzero_support(ctx, support_trunc(ctx, c.trunc));
    std::vector<std::int64_t> indices;
    for (const auto& cls : equivalence_classes(ctx)) indices.push_back(cls.p);
    out.push_back({label_n(n) + " support = class indices", indicator(support, n), indicator(indices, n)});
    out.push_back({label_n(n) + " |support| = (N+1)/2",
                   constant(static_cast<long>(support.size()), 1), constant((n + 1) / 2, 1)});
  }
  return out;
}

std::vector<Comparison> thm1_closed(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : c.primes) {
    const auto ctx = prime_context(n);
    const auto js = j_oracle_all(ctx, c.trunc);
    for (const auto& form : closed_form_table(ctx)) {
      out.push_back({label_n(n) + " A=" + std::to_string(form.a_value) + " p=" + std::to_string(form.p),
                     j_series_closed(ctx, form.a_value, c.trunc), js[static_cast<std::size_t>(form.p)]});
    }
  }
  return out;
}

std::vector<Comparison> thm2_product(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : c.primes) {
    const auto ctx = prime_context(n);
    const auto pred = theorem2_prediction(ctx);
    Series product = constant(1, c.trunc);
    for (const auto& j : j_oracle_all(ctx, c.trunc)) {
      if (!j.is_zero()) product = mul(product, j);
    }
    out.push_back({label_n(n) + " prod J = sign q^Z", product, q_pow(pred.z, c.trunc, pred.sign)});
  }
  return out;
}

// Truncation for the cyclotomic checks is in t = q^(1/N) units.
std::vector<Comparison> eq19_product(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : primes_up_to(c, 13)) {
    const auto ctx = prime_context(n);
    auto report = product_identity_check(ctx, c.trunc);
    out.push_back({label_n(n) + " prod (w^p q^(1/N)) = (q)^(N+1)/(q^N)", std::move(report.product.lhs),
                   std::move(report.product.rhs)});
    out.push_back({label_n(n) + " eigenvalue product of circulant", std::move(report.eigen_product.lhs),
                   std::move(report.eigen_product.rhs)});
  }
  return out;
}

std::vector<Comparison> eq19_circulant(const CheckContext& c) {
  std::vector<Comparison> out;
  for (auto n : primes_up_to(c, 7)) {
    const auto ctx = prime_context(n);
    const std::int64_t tq = (c.trunc + n - 1) / n;
    const auto js = j_oracle_all(ctx, tq);
    std::vector<Series> x;
    for (std::int64_t k = 0; k < n; ++k) {
      x.push_back(mul(Series::monomial(1, k, n, c.trunc), rescale(js[static_cast<std::size_t>(k)], n)));
    }
    out.push_back({label_n(n) + " det circulant(t^k J_k) = (q)^(N+1)/(q^N)^(N+1)", circulant_determinant(x),
                   eta_ratio(n, static_cast<unsigned>(n + 1), static_cast<unsigned>(n + 1), tq)});
  }
  return out;
}

std::vector<IdentityCheck> build_registry() {
  constexpr std::int64_t kT = 200;
  return {
      {"n5.expansion", "N=5 expansion: oracle J0, J2 with J1 = -1 reassemble (q^(1/5))/(q^5)", {5}, kT,
       n5_expansion},
      {"n5.reciprocal",
       "N=5 rationalized reciprocal of J0 - q^(1/5) + q^(2/5) J2 (Ramanujan's J1, J2 = our J0, J2), scale 5",
       {5}, kT, n5_reciprocal},
      {"n5.jj", "N=5: J0 J2 = -1 (Ramanujan's J1 J2 = -1)", {5}, kT, n5_jj},
      {"n5.quintic", "N=5: J0^5 - 11q + q^2 J2^5 = (q)^6/(q^5)^6", {5}, kT, n5_quintic},
      {"n5.partition", "N=5: sum p(5n+4) q^n = 5 (q^5)^5/(q)^6 and 5 | p(5n+4)", {5}, kT, n5_partition},
      {"n5.det", "N=5 circulant expansion J0^5 + q(5 J0 J2 - 1 - 5 J0^2 J2^2) + q^2 J2^5", {5}, kT, n5_det},
      {"n7.expansion", "N=7 expansion: oracle J0, J1, J5 with J2 = -1 (Ramanujan's J1, J2, J3 = our J0, J1, J5)",
       {7}, kT, n7_expansion},
      {"n7.jjj", "N=7: J0 J1 J5 = -1 (Ramanujan's J1 J2 J3 = -1)", {7}, kT, n7_jjj},
      {"n7.det_expanded", "N=7 full 7x7 circulant expansion = (q)^8/(q^7)^8", {7}, kT, n7_det_expanded},
      {"n7.det", "N=7 circulant expansion simplified with J0 J1 J5 = -1", {7}, kT, n7_det},
      {"n7.id55a", "N=7: J0^2/J5 + J1/J5^2 = q, cleared of denominators", {7}, kT, n7_id55a},
      {"n7.id55b", "N=7: J0^7 + q J1^7 + q^5 J5^7 = (q)^8/(q^7)^8 + 14q (q)^4/(q^7)^4 + 57q^2", {7}, kT,
       n7_id55b},
      {"n7.id55c", "N=7: J0^3 J1 + q J1^3 J5 + q^2 J5^3 J0 = -(q)^4/(q^7)^4 - 8q", {7}, kT, n7_id55c},
      {"n7.id55d", "N=7: J0^2 J1^3 + q J5^2 J0^3 + q^2 J1^2 J5^3 = -(q)^4/(q^7)^4 - 5q", {7}, kT, n7_id55d},
      {"n7.id56", "N=7: J0 J1^5 + J5 J0^5 + q^3 J1 J5^5 = 3q", {7}, kT, n7_id56},
      {"theta.prodsum", "theta sum = triple product for every closed-form argument pair, N <= 13", {}, kT,
       theta_prodsum},
      {"quintuple", "quintuple product identity under q -> q^N, a -> -q^A, N <= 13", {}, kT, quintuple},
      {"jacobi", "Jacobi: (q)^3 = sum (-1)^n (2n+1) q^(n(n+1)/2)", {}, kT, jacobi},
      {"thm1.support", "nonzero J's sit exactly at the class indices, (N+1)/2 of them", {}, kT, thm1_support},
      {"thm1.closed", "theta-ratio closed form = multisection oracle for every A", {}, kT, thm1_closed},
      {"thm2.product", "product of nonzero J's = (-1)^(|m|(|m|-1)/2) q^Z", {}, kT, thm2_product},
      {"eq19.product", "root-of-unity product in Z[w] (trunc in t = q^(1/N) units), N <= 13", {}, kT,
       eq19_product},
      {"eq19.circulant", "direct circulant determinant of t^k J_k(t^N) (trunc in t units), N <= 7", {}, kT,
       eq19_circulant},
  };
}

bool applies_to(const IdentityCheck& check, const std::vector<std::int64_t>& primes) {
  if (check.required_n.empty()) return true;
  return std::any_of(check.required_n.begin(), check.required_n.end(), [&](std::int64_t n) {
    return std::find(primes.begin(), primes.end(), n) != primes.end();
  });
}

CheckReport execute(const IdentityCheck& check, std::int64_t trunc, const std::vector<std::int64_t>& primes) {
  CheckReport report;
  report.id = check.id;
  report.trunc = trunc;
  report.pass = true;
  for (const auto& cmp : check.evaluate(CheckContext{trunc, primes})) {
    ++report.comparisons;
    Verdict v = compare(cmp.lhs, cmp.rhs);
    if (!v.pass && report.pass) {
      report.pass = false;
      report.residual = std::move(v.residual);
      report.first_bad_exponent = v.first_bad_exponent;
      report.failed_label = cmp.label;
    }
  }
  return report;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

CheckReport run_check(std::string_view id, std::optional<std::int64_t> trunc,
                      const std::vector<std::int64_t>& primes) {
  for (const auto& check : registry()) {
    if (check.id == id) return execute(check, trunc.value_or(check.default_trunc), primes);
  }
  throw UnknownCheck(std::string(id));
}

SuiteSummary run_suite(std::string_view prefix, std::optional<std::int64_t> trunc,
                       const std::vector<std::int64_t>& primes) {
  for (auto n : primes) prime_context(n);
  SuiteSummary summary;
  for (const auto& check : registry()) {
    if (!std::string_view(check.id).starts_with(prefix)) continue;
    if (!applies_to(check, primes)) continue;
    summary.reports.push_back(execute(check, trunc.value_or(check.default_trunc), primes));
    ++summary.total;
    if (summary.reports.back().pass) ++summary.passed;
  }
  return summary;
}

}  // namespace qseries
