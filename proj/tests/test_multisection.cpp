#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qseries/closed_form.hpp"
#include "qseries/errors.hpp"
#include "qseries/multisection.hpp"
#include "qseries/qfunctions.hpp"

using namespace qseries;

namespace {

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    bool prime = n > 1;
    for (std::int64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division") {
  const auto list = primes_between(0, 500);
  const std::set<std::int64_t> set(list.begin(), list.end());
  for (std::int64_t n = -3; n <= 500; ++n) CHECK(is_prime(n) == (set.count(n) == 1));
}

TEST_CASE("prime_context") {
  CHECK(prime_context(5).m == 1);
  CHECK(prime_context(7).m == -1);
  const auto c13 = prime_context(13);
  CHECK(c13.m == -2);
  CHECK(c13.abs_m == 2);
  for (auto n : primes_between(5, 97)) {
    const auto ctx = prime_context(n);
    CHECK(std::abs(6 * ctx.m - 1) == n);
    CHECK(ctx.abs_m == (n + 1) / 6);
  }
  CHECK_THROWS_AS(prime_context(9), NotPrime);
  CHECK_THROWS_AS(prime_context(1), NotPrime);
  CHECK_THROWS_AS(prime_context(2), UnsupportedPrime);
  CHECK_THROWS_AS(prime_context(3), UnsupportedPrime);
}

TEST_CASE("equivalence classes for N = 5 and N = 7") {
  const auto c5 = equivalence_classes(prime_context(5));
  REQUIRE(c5.size() == 3);
  CHECK(c5[0].elements == std::vector<std::int64_t>{1});
  CHECK(c5[0].p == 1);
  CHECK(c5[0].group == ClassGroup::Singleton);
  CHECK(c5[1].elements == std::vector<std::int64_t>{0, 2});
  CHECK(c5[1].p == 0);
  CHECK(c5[2].elements == std::vector<std::int64_t>{3, 4});
  CHECK(c5[2].p == 2);

  const auto c7 = equivalence_classes(prime_context(7));
  REQUIRE(c7.size() == 4);
  const std::vector<std::vector<std::int64_t>> elems{{6}, {0, 5}, {1, 4}, {2, 3}};
  const std::vector<std::int64_t> ps{2, 0, 1, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(c7[i].a_value == static_cast<std::int64_t>(i));
    CHECK(c7[i].elements == elems[i]);
    CHECK(c7[i].p == ps[i]);
  }
  CHECK(c7[0].elements.front() == 7 + prime_context(7).m);
}

TEST_CASE("property: classes partition the residues, primes up to 97") {
  for (auto n : primes_between(5, 97)) {
    CAPTURE(n);
    const auto ctx = prime_context(n);
    const auto classes = equivalence_classes(ctx);
    CHECK(classes.size() == static_cast<std::size_t>((n + 1) / 2));
    std::set<std::int64_t> seen;
    std::set<std::int64_t> ps;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(c.a_value == static_cast<std::int64_t>(i));
      for (auto a : c.elements) {
        CHECK(seen.insert(a).second);
        CHECK(pentagonal_residue(a, n) == c.p);
      }
      CHECK(ps.insert(c.p).second);
      // the label A recomputes the same residue through the shifted square
      CHECK(j_closed_form(ctx, c.a_value).p == c.p);
    }
    CHECK(seen.size() == static_cast<std::size_t>(n));
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == n - 1);
    CHECK(classes[0].elements == std::vector<std::int64_t>{(n + ctx.m) % n});
  }
}

TEST_CASE("pentagonal_root_series") {
  const auto ctx = prime_context(5);
  const auto t = pentagonal_root_series(ctx, 4);
  CHECK(t.scale() == 5);
  CHECK(t.trunc() == 20);
  CHECK(t.identical(ScaledSeries::from_terms(5, 20, {{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}})));
}

TEST_CASE("oracle examples") {
  const auto c5 = prime_context(5);
  CHECK(j_oracle(c5, 1, 100).identical(ScaledSeries::constant(-1, 1, 100)));
  CHECK(j_oracle(c5, 3, 100).is_zero());
  CHECK(j_oracle(c5, 3, 100).trunc() == 100);
  CHECK(j_oracle(prime_context(7), 2, 100).identical(ScaledSeries::constant(-1, 1, 100)));
  CHECK(j_oracle(prime_context(11), 5, 100).identical(ScaledSeries::constant(1, 1, 100)));
  CHECK_THROWS_AS(j_oracle(c5, 5, 10), std::invalid_argument);

  const auto all = j_oracle_all(prime_context(13), 80);
  for (std::int64_t r = 0; r < 13; ++r) CHECK(all[static_cast<std::size_t>(r)].identical(j_oracle(prime_context(13), r, 80)));
}

TEST_CASE("nonzero support") {
  const auto s5 = nonzero_support(prime_context(5), 100);
  CHECK(s5 == std::set<std::int64_t>{0, 1, 2});
  CHECK(nonzero_support(prime_context(7), 100) == std::set<std::int64_t>{0, 1, 2, 5});
  const auto s11 = nonzero_support(prime_context(11), 100);
  CHECK(s11 == std::set<std::int64_t>{0, 1, 2, 4, 5, 7});
  CHECK(support_trunc(prime_context(11)) == 264);
  CHECK(support_trunc(prime_context(5), 300) == 300);
}

TEST_CASE("reassembly of the pentagonal series from oracle J's") {
  for (std::int64_t n : {5, 7, 11, 13}) {
    CAPTURE(n);
    const auto ctx = prime_context(n);
    const std::int64_t trunc = 60;
    const auto js = j_oracle_all(ctx, trunc);
    const auto euler_in_t = rescale(euler_series({n}, trunc), n);  // (q^N)_inf = (t^(N^2))_inf
    ScaledSeries sum(n, n * trunc);
    for (std::int64_t r = 0; r < n; ++r) {
      const auto j_in_t = rescale(js[static_cast<std::size_t>(r)], n);  // J_r(t^N)
      sum = sum + ScaledSeries::monomial(1, r, n, n * trunc) * j_in_t * euler_in_t;
    }
    const auto expected = ScaledSeries::from_dense(n, oracle::euler_product_dense(1, n * trunc));
    CHECK(sum == expected);
    CHECK(sum.trunc() >= n * trunc - n);
  }
}

TEST_CASE("zero residues are the complement of the class set") {
  for (std::int64_t n : {5, 7, 11, 13, 17, 19, 23}) {
    const auto ctx = prime_context(n);
    std::set<std::int64_t> class_ps;
    for (const auto& c : equivalence_classes(ctx)) class_ps.insert(c.p);
    CHECK(nonzero_support(ctx, support_trunc(ctx)) == class_ps);
  }
}
