#include "onebranch/series.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "onebranch/io.hpp"

namespace onebranch {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::size_t parse_exponent(std::string_view s, std::string_view whole) {
  std::size_t e = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), e);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad exponent in series literal '" + std::string(whole) + "'");
  return e;
}

template <ExactField K>
K parse_coeff(std::string_view s, FieldSpec field, std::string_view whole) {
  if (s.empty()) return K::from_int(field, 1);
  try {
    return scalar_from_string<K>(s, field);
  } catch (const ParseError&) {
    throw ParseError("bad coefficient in series literal '" + std::string(whole) + "'");
  }
}

}  // namespace

template <ExactField K>
Series<K> parse_series(std::string_view text, FieldSpec field, std::size_t precision) {
  const std::string src = strip(text);
  if (src.empty()) throw ParseError("empty series literal");
  if (src.front() == '{') return series_from_json<K>(nlohmann::json::parse(src), field, precision);
  if (src.front() == '"' && src.back() == '"' && src.size() >= 2)
    return parse_series<K>(std::string_view(src).substr(1, src.size() - 2), field, precision);

  Series<K> out(field, precision);
  std::size_t pos = 0;
  while (pos < src.size()) {
    bool negative = false;
    if (src[pos] == '+' || src[pos] == '-') {
      negative = src[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < src.size() && src[end] != '+' && src[end] != '-') ++end;
    std::string_view term(src.data() + pos, end - pos);
    if (term.empty()) throw ParseError("empty term in series literal '" + std::string(text) + "'");
    pos = end;

    std::size_t exponent = 0;
    std::string_view coeff_text = term;
    auto tpos = term.find('t');
    if (tpos != std::string_view::npos) {
      coeff_text = term.substr(0, tpos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.remove_suffix(1);
      std::string_view rest = term.substr(tpos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^') {
        exponent = parse_exponent(rest.substr(1), text);
      } else {
        throw ParseError("bad term '" + std::string(term) + "' in series literal");
      }
    }
    K c = parse_coeff<K>(coeff_text, field, text);
    if (negative) c = -c;
    if (exponent < precision) out[exponent] += c;
  }
  return out;
}

template <ExactField K>
std::string format_series(const Series<K>& s) {
  return series_to_json(s).dump();
}

template <ExactField K>
std::string pretty_series(const Series<K>& s) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < s.precision(); ++i) {
    if (s[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit_coeff = s[i].is_one();
    if (!unit_coeff || i == 0) os << s[i].to_string();
    if (i > 0) {
      if (!unit_coeff) os << '*';
      os << 't';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

template Series<Fp> parse_series<Fp>(std::string_view, FieldSpec, std::size_t);
template Series<Rational> parse_series<Rational>(std::string_view, FieldSpec, std::size_t);
template std::string format_series<Fp>(const Series<Fp>&);
template std::string format_series<Rational>(const Series<Rational>&);
template std::string pretty_series<Fp>(const Series<Fp>&);
template std::string pretty_series<Rational>(const Series<Rational>&);

}  // namespace onebranch
