#include "qseries/json_io.hpp"

#include <stdexcept>

namespace qseries {

namespace {

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  const auto text = j.get<std::string>();
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) throw std::invalid_argument("bad integer: " + text);
  return v;
}

void check_exponent(std::int64_t e, std::int64_t prev, std::int64_t trunc) {
  if (e < 0 || e >= trunc) throw std::invalid_argument("term exponent out of range");
  if (e <= prev) throw std::invalid_argument("terms must be strictly ascending");
}

}  // namespace

json to_json(const ScaledSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) terms.push_back(json::array({t.exponent, t.coeff.get_str()}));
  return {{"scale", s.scale()}, {"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

ScaledSeries series_from_json(const json& j) {
  const auto scale = j.at("scale").get<std::int64_t>();
  const auto trunc = j.at("trunc").get<std::int64_t>();
  std::vector<Term> terms;
  std::int64_t prev = -1;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at(0).get<std::int64_t>();
    check_exponent(e, prev, trunc);
    Integer c = parse_integer(t.at(1));
    if (sgn(c) == 0) throw std::invalid_argument("zero coefficient in canonical series");
    terms.push_back({e, std::move(c)});
    prev = e;
  }
  return ScaledSeries::from_terms(scale, trunc, std::move(terms));
}

json to_json(const CycSeries& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    json coeff = json::array();
    for (const auto& v : t.coeff.vec()) coeff.push_back(v.get_str());
    terms.push_back(json::array({t.exponent, std::move(coeff)}));
  }
  return {{"order", s.order()}, {"scale", s.scale()}, {"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

CycSeries cyc_series_from_json(const json& j) {
  const int order = j.at("order").get<int>();
  const auto scale = j.at("scale").get<std::int64_t>();
  const auto trunc = j.at("trunc").get<std::int64_t>();
  std::vector<CycCoeff> dense(static_cast<std::size_t>(trunc), CycCoeff(order));
  std::int64_t prev = -1;
  for (const auto& t : j.at("terms")) {
    const auto e = t.at(0).get<std::int64_t>();
    check_exponent(e, prev, trunc);
    const auto& vec = t.at(1);
    if (vec.size() != static_cast<std::size_t>(order - 1)) {
      throw std::invalid_argument("cyclotomic coefficient must have N-1 entries");
    }
    std::vector<Integer> poly;
    for (const auto& v : vec) poly.push_back(parse_integer(v));
    dense[static_cast<std::size_t>(e)] = cyc_reduce(order, poly);
    prev = e;
  }
  return CycSeries::from_dense(order, scale, std::move(dense));
}

json to_json(const JClosedForm& f) {
  auto pair = [](const std::optional<ThetaPair>& p) -> json {
    if (!p) return nullptr;
    return json::array({p->first, p->second});
  };
  return {{"p", f.p},          {"A", f.a_value},           {"sign", f.sign},
          {"X", f.x},          {"theta_num", pair(f.theta_num)}, {"theta_den", pair(f.theta_den)}};
}

json to_json(const std::vector<JClosedForm>& table) {
  json out = json::array();
  for (const auto& f : table) out.push_back(to_json(f));
  return out;
}

json to_json(const CheckReport& r) {
  json bad = nullptr;
  if (r.first_bad_exponent) bad = *r.first_bad_exponent;
  return {{"id", r.id}, {"pass", r.pass}, {"trunc", r.trunc}, {"first_bad_exponent", bad}};
}

}  // namespace qseries
