#include "onebranch/fq_linalg.hpp"

#include <stdexcept>

#include "onebranch/field.hpp"

namespace onebranch {

Fq::Fq(std::uint32_t p) : p_(p), inv_(p, 0) {
  if (!is_prime(p) || p > 251) throw std::invalid_argument("Fq: modulus must be a prime below 256");
  for (std::uint32_t x = 1; x < p; ++x)
    for (std::uint32_t y = 1; y < p; ++y)
      if (x * y % p == 1) inv_[x] = y;
}

std::size_t Fq::rref(FqMat& m) const {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t piv = rank;
    while (piv < m.rows && m(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rank, j));
    const std::uint32_t s = inv(m(rank, col));
    for (std::size_t j = col; j < m.cols; ++j) m(rank, j) = mul(m(rank, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      const std::uint32_t f = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) = sub(m(i, j), mul(f, m(rank, j)));
    }
    ++rank;
  }
  m.a.resize(rank * m.cols);
  m.rows = rank;
  return rank;
}

std::vector<std::uint32_t> Fq::apply(const FqMat& m, const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += static_cast<std::uint64_t>(m(i, j)) * v[j];
    out[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return out;
}

FqMat Fq::multiply(const FqMat& x, const FqMat& y) const {
  FqMat out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < y.cols; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < x.cols; ++k) acc += static_cast<std::uint64_t>(x(i, k)) * y(k, j);
      out(i, j) = static_cast<std::uint32_t>(acc % p_);
    }
  return out;
}

void Fq::for_each_subspace(std::size_t n, std::size_t k, const std::function<void(const FqMat&)>& f) const {
  if (k > n) return;
  if (k == 0) {
    f(FqMat(0, n));
    return;
  }
  // pivot columns, then free entries to the right of each pivot in non-pivot columns
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_piv[c]) free.emplace_back(r, c);
    FqMat m(k, n);
    for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = 1;
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = digits[i];
      f(m);
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p_) digits[i++] = 0;
      if (i == digits.size()) break;
    }
    // next combination of pivot columns
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::string matrix_key(const FqMat& m) {
  std::string key;
  key.reserve(m.a.size() + 2);
  key.push_back(static_cast<char>(m.rows));
  key.push_back(static_cast<char>(m.cols));
  for (auto x : m.a) key.push_back(static_cast<char>(x));
  return key;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t qi = 1;
    for (std::size_t e = 0; e < n - i; ++e) qi *= q;
    num *= qi - 1;
    std::uint64_t qj = 1;
    for (std::size_t e = 0; e < i + 1; ++e) qj *= q;
    den *= qj - 1;
  }
  return num / den;
}

}  // namespace onebranch
