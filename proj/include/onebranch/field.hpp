#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "onebranch/errors.hpp"

namespace onebranch {

/// Identifies the base field: a prime field F_p, or the rationals when p == 0.
struct FieldSpec {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  std::uint32_t characteristic() const { return p; }
  std::string name() const;

  /// Accepts "F2", "F3", "F5", "F7" (any prime below 2^16) and "Q".
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint32_t n);

/// Element of F_p with canonical representative in [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  static Fp from_int(const FieldSpec& field, std::int64_t value) { return Fp(value, field.p); }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  FieldSpec field() const { return FieldSpec{p_}; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inverse() const;

  Fp operator+(const Fp& o) const {
    std::uint32_t s = v_ + o.v_;
    return raw(s >= p_ ? s - p_ : s, p_);
  }
  Fp operator-(const Fp& o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp operator*(const Fp& o) const {
    return raw(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
  }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v, std::uint32_t p) {
    Fp r;
    r.v_ = v;
    r.p_ = p;
    return r;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

/// Exact rational number.
class Rational {
 public:
  using Value = boost::multiprecision::cpp_rational;

  Rational() = default;
  explicit Rational(Value v) : v_(std::move(v)) {}
  Rational(std::int64_t num, std::int64_t den = 1);

  static Rational from_int(const FieldSpec&, std::int64_t value) { return Rational(value); }
  /// Parses "3", "-2", "5/7".
  static Rational parse(std::string_view text);

  const Value& value() const { return v_; }
  FieldSpec field() const { return FieldSpec{0}; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const;

  Rational operator+(const Rational& o) const { return Rational(Value(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(Value(v_ - o.v_)); }
  Rational operator-() const { return Rational(Value(-v_)); }
  Rational operator*(const Rational& o) const { return Rational(Value(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }

  std::string to_string() const;

 private:
  Value v_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.to_string(); }

template <class K>
concept ExactField = requires(const K a, const K b, const FieldSpec& f) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.field() } -> std::same_as<FieldSpec>;
  { K::from_int(f, 0) } -> std::same_as<K>;
};

}  // namespace onebranch
