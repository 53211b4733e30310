#pragma once

#include <json.hpp>

#include "qseries/closed_form.hpp"
#include "qseries/cyclotomic.hpp"
#include "qseries/identities.hpp"
#include "qseries/series.hpp"

namespace qseries {

using nlohmann::json;

/// {"scale": D, "trunc": T, "terms": [[e, "coeff"], ...]}, terms ascending by e.
json to_json(const ScaledSeries& s);
/// Inverse of to_json; rejects unsorted, duplicate, zero or out-of-range terms.
ScaledSeries series_from_json(const json& j);

/// Like the integer form, with each coefficient a vector of decimal strings
/// in the basis 1, w, ..., w^(N-2). Carries "order": N.
json to_json(const CycSeries& s);
CycSeries cyc_series_from_json(const json& j);

json to_json(const JClosedForm& f);
json to_json(const std::vector<JClosedForm>& table);

/// {"id", "pass", "trunc", "first_bad_exponent": null | e}
json to_json(const CheckReport& r);

}  // namespace qseries
