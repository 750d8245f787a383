#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "onebranch/series.hpp"
#include "onebranch/span.hpp"

namespace onebranch {

template <ExactField K>
K scalar_from_string(std::string_view text, FieldSpec field);

template <>
Fp scalar_from_string<Fp>(std::string_view text, FieldSpec field);
template <>
Rational scalar_from_string<Rational>(std::string_view text, FieldSpec field);

template <ExactField K>
K scalar_from_json(const nlohmann::json& j, FieldSpec field);

template <ExactField K>
nlohmann::json scalar_to_json(const K& a);
template <>
nlohmann::json scalar_to_json<Fp>(const Fp& a);
template <>
nlohmann::json scalar_to_json<Rational>(const Rational& a);

/// {"5":1,"9":2} meaning t^5 + 2t^9. A JSON string is parsed as shorthand ("t^5").
template <ExactField K>
Series<K> series_from_json(const nlohmann::json& j, FieldSpec field, std::size_t precision);

template <ExactField K>
nlohmann::json series_to_json(const Series<K>& s);

/// {"basis":[series-literals],"tail":c,"precision":N,"field":"F3"}
template <ExactField K>
nlohmann::json span_to_json(const TailSpan<K>& span);

/// Reads a span; "precision" and "field" default to the given values when absent.
template <ExactField K>
TailSpan<K> span_from_json(const nlohmann::json& j, FieldSpec field, std::size_t precision);

/// Field named in a span document, or fallback.
FieldSpec field_of_json(const nlohmann::json& j, FieldSpec fallback);

}  // namespace onebranch
