#include "onebranch/api.hpp"

#include <stdexcept>

#include "onebranch/classify.hpp"
#include "onebranch/io.hpp"
#include "onebranch/report.hpp"

namespace onebranch {

using nlohmann::json;

namespace {

template <ExactField K>
Order<K> order_of(const std::vector<std::string>& gens, FieldSpec f, std::size_t n) {
  if (gens.empty()) throw std::invalid_argument("at least one generator is needed");
  std::vector<Series<K>> g;
  for (const auto& text : gens) g.push_back(parse_series<K>(text, f, n));
  return order_from_generators<K>(g, f, n);
}

/// (multiplicity, least value not divisible by it)
template <ExactField K>
std::optional<ValuationVector> leading_pair(const Order<K>& s) {
  const auto values = s.semigroup();
  if (values.size() < 2) return std::nullopt;
  const int v1 = static_cast<int>(values[1]);
  int v2 = static_cast<int>(s.conductor());
  for (auto v : values)
    if (v % v1 != 0) {
      v2 = static_cast<int>(v);
      break;
    }
  while (v2 % v1 == 0) ++v2;
  return ValuationVector{v1, v2};
}

template <ExactField K>
json classify_impl(const std::vector<std::string>& gens, FieldSpec f, std::size_t n, std::uint32_t ch) {
  const auto s = order_of<K>(gens, f, n);
  const auto vec = leading_pair(s);
  const bool plane = vec && embedding_dimension(s) == 2;
  const auto verdict = criterion_pa_le_2(s, ch);
  json j;
  j["semigroup"] = s.semigroup();
  j["conductor"] = s.conductor();
  j["plane"] = plane;
  j["valuationVector"] = vec ? json::array({vec->v1, vec->v2}) : json(nullptr);
  const auto type = plane ? type_of(*vec) : std::nullopt;
  j["type"] = type ? json(type->to_string()) : json(nullptr);
  j["pa_le_2"] = verdict.pa_le_2;
  j["dominatedType"] = verdict.dominated_type ? json(verdict.dominated_type->to_string()) : json(nullptr);
  j["char"] = ch;
  return j;
}

template <ExactField K>
json end_chain_impl(const std::vector<std::string>& gens, FieldSpec f, std::size_t n) {
  const auto s = order_of<K>(gens, f, n);
  std::vector<Order<K>> all{s};
  for (auto& m : end_chain(s)) all.push_back(std::move(m));
  json out = json::array();
  for (std::size_t i = 0; i < all.size(); ++i)
    out.push_back({{"index", i},
                   {"values", all[i].semigroup()},
                   {"conductor", all[i].conductor()},
                   {"span", span_to_json(all[i].span())}});
  return out;
}

template <ExactField K>
FracIdeal<K> ideal_of(const json& j, const std::shared_ptr<const Order<K>>& s) {
  const auto span = span_from_json<K>(j, s->field(), s->precision());
  if (span.contains(Series<K>::one(s->field(), s->precision()))) return FracIdeal<K>(s, span);
  return normalize_ideal<K>(s, span);
}

template <ExactField K>
json isom_impl(const std::optional<json>& order_span, const std::vector<std::string>& gens, const json& a,
               const json& b, FieldSpec f, std::size_t n) {
  std::shared_ptr<const Order<K>> s;
  if (order_span)
    s = std::make_shared<const Order<K>>(Order<K>::from_span(span_from_json<K>(*order_span, f, n)));
  else
    s = std::make_shared<const Order<K>>(order_of<K>(gens, f, n));
  const auto res = is_isomorphic(ideal_of<K>(a, s), ideal_of<K>(b, s));
  json j;
  j["isomorphic"] = res.isomorphic;
  if (res.witness) j["witness"] = series_to_json(*res.witness);
  return j;
}

}  // namespace

std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw std::invalid_argument("--gens needs at least one series");
  return out;
}

json classify_order(const std::vector<std::string>& gens, FieldSpec f, std::size_t n, std::uint32_t ch) {
  if (ch != 0 && !is_prime(ch)) throw std::invalid_argument("char must be 0 or a prime");
  if (ch != 0 && f.characteristic() != ch) throw std::invalid_argument("field and char disagree");
  return f.is_rational() ? classify_impl<Rational>(gens, f, n, ch) : classify_impl<Fp>(gens, f, n, ch);
}

json end_chain_json(const std::vector<std::string>& gens, FieldSpec f, std::size_t n) {
  return f.is_rational() ? end_chain_impl<Rational>(gens, f, n) : end_chain_impl<Fp>(gens, f, n);
}

json isomorphism_json(const std::optional<json>& order_span, const std::vector<std::string>& gens, const json& a,
                      const json& b, FieldSpec f, std::size_t n) {
  if (!order_span && gens.empty()) throw std::invalid_argument("an order span or generators are needed");
  return f.is_rational() ? isom_impl<Rational>(order_span, gens, a, b, f, n)
                         : isom_impl<Fp>(order_span, gens, a, b, f, n);
}

Enumeration enumerate_classes(const std::vector<std::string>& gens, FieldSpec f, std::size_t n, std::size_t jobs,
                              const std::string& format) {
  if (f.is_rational()) throw std::invalid_argument("enumerate needs a finite field F_p");
  if (f.p > 251) throw std::invalid_argument("enumerate needs a prime below 256");
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
  auto s = std::make_shared<const Order<Fp>>(order_of<Fp>(gens, f, n));
  CascadeOptions opt;
  opt.jobs = jobs;
  const auto res = cascade(s, opt);
  return {export_classes(class_rows(res), format), res.collisions};
}

}  // namespace onebranch
