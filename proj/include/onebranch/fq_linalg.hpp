#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace onebranch {

/// Dense matrix over F_p with small p, used for coordinates on finite-dimensional quotients.
struct FqMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;

  FqMat() = default;
  FqMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  bool operator==(const FqMat&) const = default;
};

/// Arithmetic context for F_p.
class Fq {
 public:
  explicit Fq(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return (x + y) % p_; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return (x + p_ - y) % p_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p_);
  }
  std::uint32_t inv(std::uint32_t x) const { return inv_[x]; }

  /// In-place reduced row echelon form; zero rows are dropped. Returns the rank.
  std::size_t rref(FqMat& m) const;
  std::size_t rank(FqMat m) const { return rref(m); }
  bool invertible(const FqMat& m) const { return m.rows == m.cols && rank(m) == m.rows; }

  /// m * v (column vector).
  std::vector<std::uint32_t> apply(const FqMat& m, const std::vector<std::uint32_t>& v) const;
  FqMat multiply(const FqMat& x, const FqMat& y) const;

  /// Calls f once for every subspace of F_p^n of dimension k, as its RREF basis matrix.
  void for_each_subspace(std::size_t n, std::size_t k, const std::function<void(const FqMat&)>& f) const;

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inv_;
};

/// Byte key of a matrix (for hashing and lexicographic comparison).
std::string matrix_key(const FqMat& m);

/// Number of k-dimensional subspaces of F_q^n.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

}  // namespace onebranch
