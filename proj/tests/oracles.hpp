#pragma once
// Independent reference computations. None of these call the span echelon code or the
// orbit machinery they are compared against.

#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "onebranch/sandwich.hpp"

namespace oracle {

/// Membership table of the numerical semigroup generated by gens, for 0..limit.
inline std::vector<bool> semigroup_members(const std::vector<int>& gens, int limit) {
  std::vector<bool> in(limit + 1, false);
  in[0] = true;
  for (int v = 1; v <= limit; ++v)
    for (int g : gens)
      if (g <= v && in[v - g]) in[v] = true;
  return in;
}

inline std::vector<int> gaps(const std::vector<int>& gens, int limit = 400) {
  const auto in = semigroup_members(gens, limit);
  std::vector<int> out;
  for (int v = 0; v <= limit; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

/// Two-generator Frobenius number a*b - a - b.
inline int frobenius_two(int a, int b) { return a * b - a - b; }

/// Value set below the conductor, as in Order::semigroup().
inline std::vector<std::size_t> values_below_conductor(const std::vector<int>& gens) {
  const auto g = gaps(gens);
  const int c = g.empty() ? 0 : g.back() + 1;
  const auto in = semigroup_members(gens, c);
  std::vector<std::size_t> out;
  for (int v = 0; v < c; ++v)
    if (in[v]) out.push_back(static_cast<std::size_t>(v));
  return out;
}

/// Coefficient vectors mod p, index = exponent.
using Poly = std::vector<std::int64_t>;

inline Poly cauchy(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

/// Rank and the set of leading exponents (lowest nonzero index) of the row space of
/// gens truncated below `tail`, via plain elimination on integer vectors.
struct RowSpace {
  std::size_t rank = 0;
  std::set<std::size_t> leads;
};

inline RowSpace row_space(std::vector<Poly> rows, std::size_t tail, std::int64_t p) {
  for (auto& r : rows) {
    r.resize(tail);
    for (auto& c : r) c = ((c % p) + p) % p;
  }
  RowSpace out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < tail; ++col) {
    std::size_t piv = next;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[next]);
    const auto inv = inv_mod(rows[next][col], p);
    for (auto& c : rows[next]) c = c * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != next && rows[r][col] != 0) {
        const auto f = rows[r][col];
        for (std::size_t k = 0; k < tail; ++k) rows[r][k] = ((rows[r][k] - f * rows[next][k]) % p + p) % p;
      }
    out.leads.insert(col);
    ++next;
  }
  out.rank = next;
  return out;
}

inline Poly to_poly(const onebranch::Series<onebranch::Fp>& s) {
  Poly out(s.precision());
  for (std::size_t i = 0; i < s.precision(); ++i) out[i] = s[i].value();
  return out;
}

/// Multiply-and-reduce closure of K + span(gens) below the bound `tail`: returns the
/// value set (leading exponents) once products add nothing new.
inline std::set<std::size_t> closure_values(const std::vector<Poly>& gens, std::size_t tail, std::int64_t p) {
  const std::size_t n = gens.front().size();
  std::vector<Poly> rows{Poly(n, 0)};
  rows[0][0] = 1;
  for (const auto& g : gens) rows.push_back(g);
  std::size_t rank = 0;
  while (true) {
    const auto rs = row_space(rows, tail, p);
    if (rs.rank == rank) return rs.leads;
    rank = rs.rank;
    const auto snapshot = rows;
    for (const auto& a : snapshot)
      for (const auto& b : snapshot) rows.push_back(cauchy(a, b, p));
  }
}

/// Brute force: every subspace V of W containing the class of 1 is lifted to V + M I', kept
/// when S'I = I' and I != I', and the survivors are merged by pairwise is_isomorphic.
struct BruteLayer {
  std::size_t generating = 0;
  std::size_t classes = 0;
  std::vector<onebranch::Ideal> ideals;
  std::vector<std::size_t> root;
};

inline BruteLayer brute_layer(const onebranch::OrderPtr& s, const onebranch::OrderPtr& sp,
                              const std::shared_ptr<const onebranch::Ideal>& ip) {
  using namespace onebranch;
  Fq fq(s->field().p);
  const auto q = build_quotient(*s, *sp, ip);
  const std::size_t d = q.dim();
  BruteLayer out;
  for (std::size_t k = 0; k + 2 <= d; ++k)
    fq.for_each_subspace(d - 1, k, [&](const FqMat& u) {
      FqMat v(k + 1, d);
      v(0, 0) = 1;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j + 1 < d; ++j) v(r + 1, j + 1) = u(r, j);
      Ideal lifted = lift_subspace(s, q, v);
      if (product_span(sp->span(), lifted.span()) == ip->span()) out.ideals.push_back(lifted);
    });
  out.generating = out.ideals.size();
  std::vector<std::size_t> par(out.ideals.size());
  std::iota(par.begin(), par.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return par[x] == x ? x : par[x] = find(par[x]); };
  for (std::size_t i = 0; i < out.ideals.size(); ++i)
    for (std::size_t j = i + 1; j < out.ideals.size(); ++j)
      if (find(i) != find(j) && is_isomorphic(out.ideals[i], out.ideals[j]).isomorphic) par[find(j)] = find(i);
  for (std::size_t i = 0; i < out.ideals.size(); ++i) out.classes += find(i) == i;
  out.root.resize(par.size());
  for (std::size_t i = 0; i < par.size(); ++i) out.root[i] = find(i);
  return out;
}

}  // namespace oracle
