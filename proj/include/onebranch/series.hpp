#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onebranch/errors.hpp"
#include "onebranch/field.hpp"

namespace onebranch {

/// Element of K[[t]] truncated modulo t^N. Coefficient of t^i sits at index i.
template <ExactField K>
class Series {
 public:
  Series(FieldSpec field, std::size_t precision)
      : field_(field), coeffs_(precision, K::from_int(field, 0)) {
    if (precision == 0) throw Error("series precision must be positive");
  }

  static Series monomial(FieldSpec field, std::size_t precision, std::size_t exponent, K coeff) {
    Series s(field, precision);
    if (exponent < precision) s.coeffs_[exponent] = coeff;
    return s;
  }
  static Series monomial(FieldSpec field, std::size_t precision, std::size_t exponent) {
    return monomial(field, precision, exponent, K::from_int(field, 1));
  }
  static Series one(FieldSpec field, std::size_t precision) { return monomial(field, precision, 0); }

  FieldSpec field() const { return field_; }
  std::size_t precision() const { return coeffs_.size(); }
  const K& operator[](std::size_t i) const { return coeffs_[i]; }
  K& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const K> coeffs() const { return coeffs_; }

  bool is_zero() const { return !valuation().has_value(); }

  /// Order of vanishing; nullopt is the BOTTOM marker (zero modulo t^N).
  std::optional<std::size_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
  }

  Series operator+(const Series& o) const {
    check_compatible(o);
    Series r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  Series operator-(const Series& o) const {
    check_compatible(o);
    Series r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Series operator*(const K& a) const {
    Series r = *this;
    for (auto& c : r.coeffs_) c *= a;
    return r;
  }

  /// Cauchy product truncated to the common precision.
  Series operator*(const Series& o) const {
    check_compatible(o);
    const std::size_t n = coeffs_.size();
    Series r(field_, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    return r;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }

  /// Multiplication by t^k.
  Series shifted(std::size_t k) const {
    Series r(field_, coeffs_.size());
    for (std::size_t i = 0; i + k < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
  }

  /// Division by t^k; requires valuation >= k. The top k coefficients become zero.
  Series unshifted(std::size_t k) const {
    Series r(field_, coeffs_.size());
    for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) throw Error("unshift by t^" + std::to_string(k) + " of a series of lower valuation");
    for (std::size_t i = k; i < coeffs_.size(); ++i) r.coeffs_[i - k] = coeffs_[i];
    return r;
  }

  /// Same element with all coefficients at exponents >= c cleared.
  Series truncated(std::size_t c) const {
    Series r = *this;
    for (std::size_t i = c; i < r.coeffs_.size(); ++i) r.coeffs_[i] = K::from_int(field_, 0);
    return r;
  }

  /// Same element at a different precision (zero-padded or truncated).
  Series with_precision(std::size_t precision) const {
    Series r(field_, precision);
    for (std::size_t i = 0; i < precision && i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    return r;
  }

  bool operator==(const Series& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

 private:
  void check_compatible(const Series& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw PrecisionMismatch("series precisions differ: " + std::to_string(coeffs_.size()) + " vs " +
                              std::to_string(o.coeffs_.size()));
    if (!(o.field_ == field_)) throw Error("series over different fields");
  }

  FieldSpec field_;
  std::vector<K> coeffs_;
};

template <ExactField K>
std::optional<std::size_t> valuation(const Series<K>& s) {
  return s.valuation();
}

template <ExactField K>
Series<K> mul(const Series<K>& a, const Series<K>& b) {
  return a * b;
}

/// Inverse of a unit of K[[t]] modulo t^N.
template <ExactField K>
Series<K> invert_unit(const Series<K>& a) {
  auto v = a.valuation();
  if (!v || *v != 0) throw NotAUnit("series has positive valuation or is zero");
  const std::size_t n = a.precision();
  Series<K> b(a.field(), n);
  const K inv0 = a[0].inverse();
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    K acc = K::from_int(a.field(), 0);
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -(acc * inv0);
  }
  return b;
}

/// Parses "t^5", "1", "t", "2t^3+t^5", "t^3 - t^7" and the JSON object form {"5":1,"9":2}.
template <ExactField K>
Series<K> parse_series(std::string_view text, FieldSpec field, std::size_t precision);

/// JSON object literal, e.g. {"5":1,"9":2}.
template <ExactField K>
std::string format_series(const Series<K>& s);

/// Human-readable sum, e.g. "t^5 + 2*t^9".
template <ExactField K>
std::string pretty_series(const Series<K>& s);

extern template Series<Fp> parse_series<Fp>(std::string_view, FieldSpec, std::size_t);
extern template Series<Rational> parse_series<Rational>(std::string_view, FieldSpec, std::size_t);
extern template std::string format_series<Fp>(const Series<Fp>&);
extern template std::string format_series<Rational>(const Series<Rational>&);
extern template std::string pretty_series<Fp>(const Series<Fp>&);
extern template std::string pretty_series<Rational>(const Series<Rational>&);

}  // namespace onebranch
