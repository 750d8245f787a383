#include "onebranch/io.hpp"

#include <charconv>

namespace onebranch {

using nlohmann::json;

template <>
Fp scalar_from_string<Fp>(std::string_view text, FieldSpec field) {
  if (field.is_rational()) throw ParseError("F_p scalar requested for field Q");
  // Accept rationals and reduce them modulo p.
  Rational q = Rational::parse(text);
  const auto num = boost::multiprecision::numerator(q.value()) % field.p;
  const auto den = boost::multiprecision::denominator(q.value()) % field.p;
  Fp d(static_cast<std::int64_t>(den), field.p);
  if (d.is_zero()) throw ParseError("denominator vanishes in " + field.name());
  return Fp(static_cast<std::int64_t>(num), field.p) / d;
}

template <>
Rational scalar_from_string<Rational>(std::string_view text, FieldSpec) {
  return Rational::parse(text);
}

template <ExactField K>
K scalar_from_json(const json& j, FieldSpec field) {
  if (j.is_number_integer()) return K::from_int(field, j.get<std::int64_t>());
  if (j.is_string()) return scalar_from_string<K>(j.get<std::string>(), field);
  throw ParseError("scalar must be an integer or a \"p/q\" string, got " + j.dump());
}

template <>
json scalar_to_json<Fp>(const Fp& a) {
  return a.value();
}

template <>
json scalar_to_json<Rational>(const Rational& a) {
  const auto den = boost::multiprecision::denominator(a.value());
  const auto num = boost::multiprecision::numerator(a.value());
  if (den == 1 && boost::multiprecision::abs(num) < (std::int64_t{1} << 62)) return num.convert_to<std::int64_t>();
  return a.to_string();
}

template <ExactField K>
Series<K> series_from_json(const json& j, FieldSpec field, std::size_t precision) {
  if (j.is_string()) return parse_series<K>(j.get<std::string>(), field, precision);
  if (!j.is_object()) throw ParseError("series literal must be an object or string, got " + j.dump());
  Series<K> s(field, precision);
  for (const auto& [key, value] : j.items()) {
    std::size_t e = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), e);
    if (ec != std::errc() || ptr != key.data() + key.size()) throw ParseError("bad exponent key '" + key + "'");
    if (e < precision) s[e] += scalar_from_json<K>(value, field);
  }
  return s;
}

template <ExactField K>
json series_to_json(const Series<K>& s) {
  json out = json::object();
  for (std::size_t i = 0; i < s.precision(); ++i)
    if (!s[i].is_zero()) out[std::to_string(i)] = scalar_to_json(s[i]);
  return out;
}

template <ExactField K>
json span_to_json(const TailSpan<K>& span) {
  json basis = json::array();
  for (const auto& b : span.basis()) basis.push_back(series_to_json(b));
  return json{{"basis", basis}, {"tail", span.tail()}, {"precision", span.precision()}, {"field", span.field().name()}};
}

FieldSpec field_of_json(const json& j, FieldSpec fallback) {
  if (j.is_object() && j.contains("field")) return FieldSpec::parse(j.at("field").get<std::string>());
  return fallback;
}

template <ExactField K>
TailSpan<K> span_from_json(const json& j, FieldSpec field, std::size_t precision) {
  if (!j.is_object() || !j.contains("basis") || !j.contains("tail"))
    throw ParseError("span JSON needs \"basis\" and \"tail\"");
  field = field_of_json(j, field);
  if (j.contains("precision")) precision = j.at("precision").get<std::size_t>();
  std::vector<Series<K>> gens;
  for (const auto& b : j.at("basis")) gens.push_back(series_from_json<K>(b, field, precision));
  return TailSpan<K>::canonicalize(gens, j.at("tail").get<std::size_t>(), field, precision);
}

template Fp scalar_from_json<Fp>(const json&, FieldSpec);
template Rational scalar_from_json<Rational>(const json&, FieldSpec);
template Series<Fp> series_from_json<Fp>(const json&, FieldSpec, std::size_t);
template Series<Rational> series_from_json<Rational>(const json&, FieldSpec, std::size_t);
template json series_to_json<Fp>(const Series<Fp>&);
template json series_to_json<Rational>(const Series<Rational>&);
template json span_to_json<Fp>(const TailSpan<Fp>&);
template json span_to_json<Rational>(const TailSpan<Rational>&);
template TailSpan<Fp> span_from_json<Fp>(const json&, FieldSpec, std::size_t);
template TailSpan<Rational> span_from_json<Rational>(const json&, FieldSpec, std::size_t);

}  // namespace onebranch
