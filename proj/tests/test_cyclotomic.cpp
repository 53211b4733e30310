#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qseries/cyclotomic.hpp"
#include "qseries/errors.hpp"
#include "qseries/json_io.hpp"

using namespace qseries;

namespace {

CycCoeff reduce(int order, std::vector<int> poly) {
  std::vector<Integer> p(poly.begin(), poly.end());
  return cyc_reduce(order, p);
}

std::vector<Integer> ints(std::vector<int> v) { return {v.begin(), v.end()}; }

// Leibniz expansion over all permutations; the reference for the subset DP.
ScaledSeries naive_determinant(const std::vector<ScaledSeries>& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ScaledSeries det(x[0].scale(), x[0].trunc());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    ScaledSeries term = ScaledSeries::constant(inversions % 2 ? -1 : 1, x[0].scale(), x[0].trunc());
    for (std::size_t i = 0; i < n; ++i) term = oracle::naive_mul(term, x[(i + n - perm[i]) % n]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace

TEST_CASE("cyc_reduce examples") {
  CHECK(reduce(5, {0, 0, 0, 0, 0, 1}).vec()[0] == 1);
  CHECK(reduce(5, {0, 0, 0, 0, 0, 1}).as_integer() == Integer(1));
  CHECK(reduce(5, {1, 1, 1, 1, 1}).is_zero());
  const auto w4 = CycCoeff::monomial(5, 1, 4);
  CHECK(w4 * w4 == CycCoeff::monomial(5, 1, 3));
  CHECK(w4.vec().size() == 4);
  CHECK(std::all_of(w4.vec().begin(), w4.vec().end(), [](const Integer& c) { return c == -1; }));
  CHECK(CycCoeff::integer(7, 5).as_integer() == Integer(5));
  CHECK_FALSE(CycCoeff::monomial(7, 2, 3).as_integer().has_value());
  // the all-equal vector is not an integer once w^(N-1) has been eliminated
  CHECK_FALSE(reduce(5, {3, 3, 3, 3}).as_integer().has_value());
}

TEST_CASE("property: cyclotomic arithmetic matches complex evaluation") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    const int order = (i % 3 == 0) ? 5 : (i % 3 == 1) ? 7 : 11;
    std::vector<Integer> pa(static_cast<std::size_t>(2 * order));
    std::vector<Integer> pb(static_cast<std::size_t>(order));
    for (auto& c : pa) c = coeff(rng);
    for (auto& c : pb) c = coeff(rng);
    std::complex<double> za = 0;
    std::complex<double> zb = 0;
    const double angle = 2 * std::numbers::pi / order;
    for (std::size_t k = 0; k < pa.size(); ++k) za += pa[k].get_d() * std::polar(1.0, angle * double(k));
    for (std::size_t k = 0; k < pb.size(); ++k) zb += pb[k].get_d() * std::polar(1.0, angle * double(k));
    const auto a = cyc_reduce(order, pa);
    const auto b = cyc_reduce(order, pb);
    CHECK(std::abs(oracle::evaluate(a) - za) < 1e-8);
    CHECK(std::abs(oracle::evaluate(a * b) - za * zb) < 1e-6);
    auto sum = a;
    sum += b;
    CHECK(std::abs(oracle::evaluate(sum) - (za + zb)) < 1e-8);
    // integrality agrees with the numeric value being real and integral
    const auto n = sum.as_integer();
    if (n) CHECK(std::abs(oracle::evaluate(sum) - n->get_d()) < 1e-8);
  }
}

TEST_CASE("omega_twist") {
  const auto a = ScaledSeries::from_terms(5, 20, {{0, 1}, {1, -1}, {5, 3}, {10, 2}, {13, 4}});
  const auto t0 = omega_twist(a, 5, 0);
  CHECK(t0.is_rational());
  CHECK(t0.to_integer_series().identical(a));

  const auto only5 = ScaledSeries::from_terms(5, 20, {{5, 3}, {10, -2}, {15, 7}});
  for (std::int64_t p = 0; p < 5; ++p) CHECK(omega_twist(only5, 5, p).to_integer_series().identical(only5));

  const auto line = omega_twist(ScaledSeries::from_terms(5, 10, {{0, 1}, {1, -1}}), 5, 1);
  REQUIRE(line.terms().size() == 2);
  CHECK(line.terms()[0].coeff == CycCoeff::integer(5, 1));
  CHECK(line.terms()[1].coeff == CycCoeff::monomial(5, -1, 1));
  CHECK_THROWS_AS(line.to_integer_series(), NonRationalCoefficient);

  CHECK_THROWS_AS(omega_twist(ScaledSeries::constant(1, 1, 5), 5, 1), IncompatibleScale);
}

TEST_CASE("cyc_mul of embedded series matches integer mul") {
  std::mt19937_64 rng(9);
  const auto a = oracle::random_series(rng, 7, 40);
  const auto b = oracle::random_series(rng, 7, 35);
  const auto product = cyc_mul(CycSeries::embed(a, 7), CycSeries::embed(b, 7));
  CHECK(product.to_integer_series().identical(a * b));
}

TEST_CASE("cyclotomic series json round trip") {
  const auto line = omega_twist(ScaledSeries::from_terms(5, 10, {{0, 1}, {1, -1}, {3, 2}}), 5, 2);
  const json j = to_json(line);
  CHECK(j["order"] == 5);
  const auto back = cyc_series_from_json(json::parse(j.dump()));
  REQUIRE(back.terms().size() == line.terms().size());
  for (std::size_t k = 0; k < back.terms().size(); ++k) {
    CHECK(back.terms()[k].exponent == line.terms()[k].exponent);
    CHECK(back.terms()[k].coeff == line.terms()[k].coeff);
  }
}

TEST_CASE("twisted product of 1 - t is 1 - q") {
  // prod_p (1 - w^p t) = 1 - t^N
  for (int n : {5, 7, 11}) {
    const auto line = ScaledSeries::from_terms(n, 3 * n, {{0, 1}, {1, -1}});
    const auto product = twisted_product(line, n).to_integer_series();
    CHECK(product.identical(ScaledSeries::from_terms(n, 3 * n, {{0, 1}, {n, -1}})));
  }
}

TEST_CASE("first twist is the pentagonal series itself") {
  const auto ctx = prime_context(7);
  const auto pent = pentagonal_root_series(ctx, 30);
  CHECK(omega_twist(pent, 7, 0).to_integer_series().identical(pent));
}

TEST_CASE("circulant determinant") {
  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<ScaledSeries> x;
    for (std::size_t k = 0; k < n; ++k) x.push_back(oracle::random_series(rng, 1, 12, 0.5, 5));
    CAPTURE(n);
    CHECK(circulant_determinant(x).identical(naive_determinant(x)));
  }
  // 2x2: x0^2 - x1^2
  const std::vector<ScaledSeries> two{ScaledSeries::constant(3, 1, 5), ScaledSeries::constant(2, 1, 5)};
  CHECK(circulant_determinant(two).identical(ScaledSeries::constant(5, 1, 5)));
}

TEST_CASE("circulant of the J's equals the eigenvalue product") {
  const auto ctx = prime_context(5);
  const std::int64_t trunc_q = 40;
  const auto js = j_oracle_all(ctx, trunc_q);
  std::vector<ScaledSeries> x;
  for (std::int64_t k = 0; k < 5; ++k) {
    x.push_back(ScaledSeries::monomial(1, k, 5, 5 * trunc_q) * rescale(js[static_cast<std::size_t>(k)], 5));
  }
  const auto det = circulant_determinant(x);
  const auto e1 = euler_series({1}, trunc_q);
  const auto e5 = euler_series({5}, trunc_q);
  CHECK(det == pow(e1, 6) / pow(e5, 6));

  const auto report = product_identity_check(ctx, 5 * trunc_q);
  CHECK(report.eigen_product.lhs == det);
}

TEST_CASE("product identity") {
  for (std::int64_t n : {5, 7}) {
    CAPTURE(n);
    const auto report = product_identity_check(prime_context(n), 250);
    CHECK(report.trunc_t == 250);
    CHECK(report.trunc_q == (250 + n - 1) / n);
    CHECK(report.product_verdict.pass);
    CHECK(report.eigen_verdict.pass);
    CHECK(report.pass());
    CHECK(report.product.lhs.trunc() >= 250 / n);
  }
}
