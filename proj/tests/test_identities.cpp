#include <doctest.h>

#include <set>

#include "qseries/errors.hpp"
#include "qseries/identities.hpp"
#include "qseries/json_io.hpp"
#include "qseries/multisection.hpp"
#include "qseries/qfunctions.hpp"

using namespace qseries;

TEST_CASE("registry ids are unique and documented") {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.description.empty());
    CHECK(c.default_trunc == 200);
  }
  for (const char* id : {"n5.expansion", "n5.reciprocal", "n5.jj", "n5.quintic", "n5.partition", "n5.det",
                         "n7.expansion", "n7.jjj", "n7.det", "n7.id55a", "n7.id55b", "n7.id55c", "n7.id55d",
                         "n7.id56", "theta.prodsum", "quintuple", "jacobi", "thm1.support", "thm1.closed",
                         "thm2.product", "eq19.product"}) {
    CHECK(ids.count(id) == 1);
  }
}

TEST_CASE("run_check examples") {
  const auto jj = run_check("n5.jj", 200);
  CHECK(jj.pass);
  CHECK(jj.trunc == 200);
  CHECK(jj.residual.is_zero());
  CHECK_FALSE(jj.first_bad_exponent.has_value());

  CHECK(run_check("n7.id56", 200).pass);
  CHECK(run_check("n7.id55b", 200).pass);
  CHECK(run_check("n5.reciprocal").trunc == 200);
  CHECK_THROWS_AS(run_check("nosuch"), UnknownCheck);
}

TEST_CASE("p(5n+4) is divisible by 5") {
  CHECK(run_check("n5.partition", 120).pass);
  const auto p = partition_series(5 * 116);
  for (std::int64_t n = 0; n <= 115; ++n) CHECK(Integer(p.coeff(5 * n + 4) % 5) == 0);
}

TEST_CASE("the q^2 constant in the seventh-power identity is 57") {
  // J0^7 + q J1^7 + q^5 J5^7 - (q)^8/(q^7)^8 - 14 q (q)^4/(q^7)^4, computed
  // without assuming the constant, must be exactly c q^2 with c = 57.
  const std::int64_t t = 60;
  const auto js = j_oracle_all(prime_context(7), t);
  const auto q = ScaledSeries::monomial(1, 1, 1, t);
  const auto lhs = pow(js[0], 7) + q * pow(js[1], 7) + pow(q, 5) * pow(js[5], 7);
  const auto e1 = euler_series({1}, t);
  const auto e7 = euler_series({7}, t);
  const auto ratio4 = pow(e1, 4) / pow(e7, 4);
  const auto rest = lhs - pow(ratio4, 2) - Integer(14) * q * ratio4;
  REQUIRE(rest.size() == 1);
  CHECK(rest.terms()[0].exponent == 2);
  CHECK(rest.terms()[0].coeff == 57);
}

TEST_CASE("failures report the first offending exponent") {
  // a deliberately wrong identity through the public comparison path
  const auto lhs = euler_series({1}, 50);
  auto rhs = lhs + ScaledSeries::monomial(1, 17, 1, 50);
  const auto v = compare(lhs, rhs);
  CHECK_FALSE(v.pass);
  CHECK(v.first_bad_exponent == 17);
  CHECK(v.residual.identical(ScaledSeries::monomial(-1, 17, 1, 50)));
}

TEST_CASE("run_suite") {
  const auto n5 = run_suite("n5", 200);
  CHECK(n5.total == 6);
  CHECK(n5.passed == 6);
  CHECK(n5.ok());

  const auto thm = run_suite("thm", 200, {5, 7, 11, 13});
  CHECK(thm.total == 3);
  CHECK(thm.ok());

  const auto none = run_suite("nosuch");
  CHECK(none.reports.empty());
  CHECK(none.total == 0);
  CHECK(none.passed == 0);

  // fixed-N checks are skipped when their N is not requested
  const auto only11 = run_suite("", 100, {11});
  for (const auto& r : only11.reports) CHECK(r.id.rfind("n5.", 0) != 0);
  CHECK(only11.ok());
}

TEST_CASE("every check passes at its default truncation") {
  const auto all = run_suite("");
  CHECK(all.total == registry().size());
  for (const auto& r : all.reports) {
    CAPTURE(r.id);
    CHECK(r.pass);
    CHECK(r.comparisons > 0);
  }
}

TEST_CASE("report json") {
  const auto r = run_check("jacobi", 50);
  const json j = to_json(r);
  CHECK(j["id"] == "jacobi");
  CHECK(j["pass"] == true);
  CHECK(j["trunc"] == 50);
  CHECK(j["first_bad_exponent"].is_null());
}
