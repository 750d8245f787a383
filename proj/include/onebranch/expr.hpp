#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>

#include "onebranch/errors.hpp"
#include "onebranch/series.hpp"

namespace onebranch {

/// Exponents of the named elements of the monomial N28 model: x = t^5, y = t^8, z = y/x, t.
inline std::size_t symbol_exponent(char c) {
  switch (c) {
    case 'x': return 5;
    case 'y': return 8;
    case 'z': return 3;
    case 't': return 1;
    default: throw ParseError(std::string("unknown symbol '") + c + "'");
  }
}

inline bool is_param_symbol(char c) { return c == 'a' || c == 'b' || c == 'g' || c == 'h'; }

/// Evaluates expressions such as "z+a*t*z^2+b*z^3", "z^2x(1+az+bz^2)" or "-2t^4".
/// Juxtaposition multiplies; a, b, g, h are parameters looked up in `params`.
template <ExactField K>
class ExprEvaluator {
 public:
  ExprEvaluator(FieldSpec field, std::size_t precision, std::map<char, K> params)
      : field_(field), n_(precision), params_(std::move(params)) {}

  Series<K> operator()(const std::string& text) {
    src_ = &text;
    pos_ = 0;
    Series<K> out = expr();
    skip();
    if (pos_ != text.size()) fail("trailing input");
    return out;
  }

 private:
  void skip() {
    while (pos_ < src_->size() && std::isspace(static_cast<unsigned char>((*src_)[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < src_->size() ? (*src_)[pos_] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + *src_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  Series<K> constant(std::int64_t c) const {
    return Series<K>::one(field_, n_) * K::from_int(field_, c);
  }

  Series<K> expr() {
    Series<K> acc(field_, n_);
    bool first = true;
    while (true) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Series<K> t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      c = peek();
      if (c != '+' && c != '-') break;
    }
    return acc;
  }

  Series<K> term() {
    Series<K> acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  std::size_t exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < src_->size() && std::isdigit(static_cast<unsigned char>((*src_)[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return std::stoul(src_->substr(start, pos_ - start));
  }

  Series<K> factor() {
    char c = peek();
    Series<K> base(field_, n_);
    if (c == '(') {
      ++pos_;
      base = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_->size() && std::isdigit(static_cast<unsigned char>((*src_)[pos_]))) ++pos_;
      base = constant(std::stoll(src_->substr(start, pos_ - start)));
    } else if (is_param_symbol(c)) {
      ++pos_;
      auto it = params_.find(c);
      if (it == params_.end()) fail(std::string("unbound parameter '") + c + "'");
      base = Series<K>::one(field_, n_) * it->second;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const std::size_t e = symbol_exponent(c);
      base = e < n_ ? Series<K>::monomial(field_, n_, e) : Series<K>(field_, n_);
    } else {
      fail("unexpected character");
    }
    std::size_t k = exponent();
    Series<K> out = Series<K>::one(field_, n_);
    for (std::size_t i = 0; i < k; ++i) out = out * base;
    return out;
  }

  FieldSpec field_;
  std::size_t n_;
  std::map<char, K> params_;
  const std::string* src_ = nullptr;
  std::size_t pos_ = 0;
};

/// Parameters occurring in an expression.
inline std::set<char> params_in(const std::string& text) {
  std::set<char> out;
  for (char c : text)
    if (is_param_symbol(c)) out.insert(c);
  return out;
}

}  // namespace onebranch
