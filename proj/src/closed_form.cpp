#include "qseries/closed_form.hpp"

#include <stdexcept>

#include "qseries/qfunctions.hpp"

namespace qseries {

std::int64_t shifted_square(std::int64_t n, std::int64_t a_value) {
  const std::int64_t d = n - 6 * a_value;
  const std::int64_t num = d * d - 1;
  // N - 6A is coprime to 6, so its square is 1 mod 24.
  if (num % 24 != 0) throw InternalInconsistency("(N-6A)^2 - 1 not divisible by 24");
  return num / 24;
}

JClosedForm j_closed_form(const PrimeContext& ctx, std::int64_t a_value) {
  const std::int64_t n = ctx.n;
  if (a_value < 0 || 2 * a_value > n - 1) throw std::invalid_argument("A out of range [0, (N-1)/2]");
  const std::int64_t s = shifted_square(n, a_value);
  JClosedForm form{s % n, a_value, (a_value + ctx.abs_m) % 2 == 0 ? 1 : -1, s / n, std::nullopt,
                   std::nullopt};
  if (a_value > 0) {
    form.theta_num = ThetaPair{2 * a_value, n - 2 * a_value};
    form.theta_den = ThetaPair{a_value, n - a_value};
  }
  return form;
}

std::vector<JClosedForm> closed_form_table(const PrimeContext& ctx) {
  std::vector<JClosedForm> table;
  for (std::int64_t a = 0; 2 * a <= ctx.n - 1; ++a) table.push_back(j_closed_form(ctx, a));
  return table;
}

ScaledSeries j_series_closed(const PrimeContext& ctx, std::int64_t a_value, std::int64_t trunc) {
  const JClosedForm form = j_closed_form(ctx, a_value);
  ScaledSeries lead = ScaledSeries::monomial(form.sign, form.x, 1, trunc);
  if (!form.theta_num) return lead;
  auto theta = [trunc](const ThetaPair& e) {
    return theta_sum(ThetaArg{-1, {e.first}}, ThetaArg{-1, {e.second}}, trunc);
  };
  return mul(lead, div(theta(*form.theta_num), theta(*form.theta_den)));
}

ProductPrediction theorem2_prediction(const PrimeContext& ctx) {
  const std::int64_t n = ctx.n;
  std::int64_t p_sum = 0;
  for (const auto& form : closed_form_table(ctx)) p_sum += form.p;
  const std::int64_t num = (n - 1) * (n + 1) * (n + 1) - 48 * p_sum;
  if (num % (48 * n) != 0) {
    throw InternalInconsistency("product exponent is not an integer for N = " + std::to_string(n));
  }
  const std::int64_t z = num / (48 * n);
  if (z < 0) throw InternalInconsistency("negative product exponent for N = " + std::to_string(n));
  const std::int64_t k = ctx.abs_m * (ctx.abs_m - 1) / 2;
  return {k % 2 == 0 ? 1 : -1, z};
}

Verdict theorem2_check(const PrimeContext& ctx, std::int64_t trunc) {
  const ProductPrediction pred = theorem2_prediction(ctx);
  if (trunc < pred.z + 2) throw std::invalid_argument("truncation too small for the product check");
  ScaledSeries product = ScaledSeries::constant(1, 1, trunc);
  for (const auto& j : j_oracle_all(ctx, trunc)) {
    if (!j.is_zero()) product = mul(product, j);
  }
  return compare(product, ScaledSeries::monomial(pred.sign, pred.z, 1, trunc));
}

}  // namespace qseries
