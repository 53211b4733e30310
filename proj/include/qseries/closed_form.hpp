#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qseries/multisection.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Exponent pair (e1, e2) standing for the theta function f(-q^e1, -q^e2).
using ThetaPair = std::pair<std::int64_t, std::int64_t>;

/// Closed form of one nonzero J_p: sign * q^X * f(num) / f(den).
struct JClosedForm {
  std::int64_t p;
  std::int64_t a_value;
  int sign;
  std::int64_t x;
  std::optional<ThetaPair> theta_num;  ///< (2A, N-2A); empty when A = 0
  std::optional<ThetaPair> theta_den;  ///< (A, N-A); empty when A = 0
};

/// Sign and exponent of the product of all nonzero J's: sign * q^Z.
struct ProductPrediction {
  int sign;
  std::int64_t z;
};

/// ((N - 6A)^2 - 1) / 24, exact.
std::int64_t shifted_square(std::int64_t n, std::int64_t a_value);

JClosedForm j_closed_form(const PrimeContext& ctx, std::int64_t a_value);
std::vector<JClosedForm> closed_form_table(const PrimeContext& ctx);

/// Evaluates the closed form to q^trunc through series division of theta sums.
ScaledSeries j_series_closed(const PrimeContext& ctx, std::int64_t a_value, std::int64_t trunc);

ProductPrediction theorem2_prediction(const PrimeContext& ctx);

/// Multiplies every nonzero oracle J and compares the result with sign * q^Z.
Verdict theorem2_check(const PrimeContext& ctx, std::int64_t trunc);

}  // namespace qseries
