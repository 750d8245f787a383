#include "onebranch/field.hpp"

#include <charconv>

namespace onebranch {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string FieldSpec::name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return FieldSpec{0};
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
    if (ec == std::errc() && ptr == text.data() + text.size() && is_prime(p) && p < (1u << 16))
      return FieldSpec{p};
  }
  throw ParseError("invalid field '" + std::string(text) + "' (expected F<prime> or Q)");
}

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2) throw Error("Fp modulus must be a prime");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  v_ = static_cast<std::uint32_t>(r);
}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error("division by zero in " + field().name());
  // extended Euclid
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Fp(x0, p_);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  v_ = Value(num) / Value(den);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    std::int64_t out = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw ParseError("invalid rational '" + std::string(text) + "'");
    return out;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::inverse() const {
  if (v_ == 0) throw Error("division by zero in Q");
  return Rational(Value(1 / v_));
}

std::string Rational::to_string() const {
  const auto num = boost::multiprecision::numerator(v_);
  const auto den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace onebranch
