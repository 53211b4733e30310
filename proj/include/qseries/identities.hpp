#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// Parameters shared by every check in one run.
struct CheckContext {
  std::int64_t trunc;
  std::vector<std::int64_t> primes;
};

/// One side-by-side comparison produced by a check. Parameterized checks
/// (over N, A, ...) produce several.
struct Comparison {
  std::string label;
  ScaledSeries lhs;
  ScaledSeries rhs;
};

struct IdentityCheck {
  std::string id;
  std::string description;
  std::vector<std::int64_t> required_n;  ///< fixed N values; empty means "every N in the run"
  std::int64_t default_trunc;
  std::function<std::vector<Comparison>(const CheckContext&)> evaluate;
};

struct CheckReport {
  std::string id;
  bool pass = false;
  std::int64_t trunc = 0;
  std::size_t comparisons = 0;
  ScaledSeries residual;  ///< residual of the first failing comparison, zero on success
  std::optional<std::int64_t> first_bad_exponent;
  std::string failed_label;
};

struct SuiteSummary {
  std::vector<CheckReport> reports;
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

inline const std::vector<std::int64_t> kDefaultPrimes{5, 7, 11, 13};

/// Every registered check, in a stable order.
const std::vector<IdentityCheck>& registry();

/// Runs one check. A missing trunc uses the check's default.
CheckReport run_check(std::string_view id, std::optional<std::int64_t> trunc = std::nullopt,
                      const std::vector<std::int64_t>& primes = kDefaultPrimes);

/// Runs every check whose id starts with prefix (empty prefix runs all).
SuiteSummary run_suite(std::string_view prefix, std::optional<std::int64_t> trunc = std::nullopt,
                       const std::vector<std::int64_t>& primes = kDefaultPrimes);

}  // namespace qseries
