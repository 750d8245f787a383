#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "onebranch/errors.hpp"
#include "onebranch/series.hpp"

namespace onebranch {

/// A K-subspace L of K[[t]] with t^c K[[t]] contained in L, stored in canonical form:
/// monic basis rows with strictly increasing, pairwise distinct valuations below c, each
/// row zero at the other rows' valuations and at every exponent >= c, and c minimal.
/// Equal subspaces have componentwise equal canonical forms.
template <ExactField K>
class TailSpan {
 public:
  /// The pure tail t^c R.
  TailSpan(FieldSpec field, std::size_t precision, std::size_t tail)
      : field_(field), precision_(precision), tail_(tail) {
    if (tail > precision)
      throw PrecisionExhausted("tail t^" + std::to_string(tail) + " exceeds precision " + std::to_string(precision));
  }

  /// Canonical span of generators together with t^tail R.
  static TailSpan canonicalize(const std::vector<Series<K>>& generators, std::size_t tail, FieldSpec field,
                               std::size_t precision) {
    TailSpan out(field, precision, tail);
    for (const auto& g : generators) {
      if (g.precision() != precision)
        throw PrecisionMismatch("generator precision " + std::to_string(g.precision()) + " != " +
                                std::to_string(precision));
      out.insert(g);
    }
    out.collapse_tail();
    return out;
  }

  static TailSpan canonicalize(const std::vector<Series<K>>& generators, std::size_t tail) {
    if (generators.empty()) throw Error("canonicalize: need field and precision for an empty generator set");
    return canonicalize(generators, tail, generators.front().field(), generators.front().precision());
  }

  /// The whole ring R.
  static TailSpan whole(FieldSpec field, std::size_t precision) { return TailSpan(field, precision, 0); }

  FieldSpec field() const { return field_; }
  std::size_t precision() const { return precision_; }
  std::size_t tail() const { return tail_; }
  const std::vector<Series<K>>& basis() const { return basis_; }

  /// Valuations of the basis rows, increasing.
  std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> out;
    out.reserve(basis_.size());
    for (const auto& b : basis_) out.push_back(*b.valuation());
    return out;
  }

  /// All valuations of nonzero elements below the tail (the tail itself covers [c, inf)).
  std::vector<std::size_t> values() const { return pivots(); }

  bool has_value(std::size_t v) const {
    if (v >= tail_) return true;
    for (const auto& b : basis_)
      if (*b.valuation() == v) return true;
    return false;
  }

  /// Smallest valuation of a nonzero element.
  std::size_t min_valuation() const { return basis_.empty() ? tail_ : *basis_.front().valuation(); }

  /// dim_K R/L, independent of the truncation order.
  std::size_t codim() const { return tail_ - basis_.size(); }

  /// Canonical remainder of s modulo L: zero at every pivot and at every exponent >= tail.
  Series<K> reduce(const Series<K>& s) const {
    check_precision(s);
    Series<K> r = s.truncated(tail_);
    for (const auto& b : basis_) {
      const std::size_t p = *b.valuation();
      if (r[p].is_zero()) continue;
      const K c = r[p];
      for (std::size_t i = p; i < tail_; ++i)
        if (!b[i].is_zero()) r[i] -= c * b[i];
    }
    return r;
  }

  bool contains(const Series<K>& s) const { return reduce(s).is_zero(); }

  bool contains(const TailSpan& other) const {
    if (other.tail_ < tail_) {
      for (std::size_t k = other.tail_; k < tail_; ++k)
        if (!has_value(k) || !contains(Series<K>::monomial(field_, precision_, k))) return false;
    }
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const auto& b) { return contains(b); });
  }

  /// Same subspace represented at another truncation order.
  TailSpan with_precision(std::size_t precision) const {
    std::vector<Series<K>> gens;
    for (const auto& b : basis_) gens.push_back(b.with_precision(precision));
    return canonicalize(gens, tail_, field_, precision);
  }

  bool operator==(const TailSpan& o) const {
    return field_ == o.field_ && precision_ == o.precision_ && tail_ == o.tail_ && basis_ == o.basis_;
  }

  /// Equality of the represented subspaces, ignoring the truncation order.
  bool same_subspace(const TailSpan& o) const {
    if (!(field_ == o.field_) || tail_ != o.tail_ || basis_.size() != o.basis_.size()) return false;
    for (std::size_t r = 0; r < basis_.size(); ++r)
      for (std::size_t i = 0; i < tail_; ++i)
        if (!(basis_[r][i] == o.basis_[r][i])) return false;
    return true;
  }

 private:
  void check_precision(const Series<K>& s) const {
    if (s.precision() != precision_)
      throw PrecisionMismatch("series precision " + std::to_string(s.precision()) + " != span precision " +
                              std::to_string(precision_));
  }

  // Adds one generator, keeping rows monic and fully reduced.
  void insert(const Series<K>& g) {
    Series<K> r = reduce(g);
    auto v = r.valuation();
    if (!v) return;
    const std::size_t p = *v;
    const K inv = r[p].inverse();
    for (std::size_t i = p; i < tail_; ++i) r[i] *= inv;
    for (auto& b : basis_) {
      if (b[p].is_zero()) continue;
      const K c = b[p];
      for (std::size_t i = p; i < tail_; ++i)
        if (!r[i].is_zero()) b[i] -= c * r[i];
    }
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), p,
                                [](const Series<K>& b, std::size_t key) { return *b.valuation() < key; });
    basis_.insert(pos, std::move(r));
  }

  // Absorbs rows equal to t^(c-1) into the tail until the tail is minimal.
  void collapse_tail() {
    while (!basis_.empty() && *basis_.back().valuation() + 1 == tail_) {
      basis_.pop_back();
      --tail_;
    }
  }

  FieldSpec field_;
  std::size_t precision_;
  std::size_t tail_;
  std::vector<Series<K>> basis_;
};

template <ExactField K>
TailSpan<K> canonicalize(const std::vector<Series<K>>& generators, std::size_t tail, FieldSpec field,
                         std::size_t precision) {
  return TailSpan<K>::canonicalize(generators, tail, field, precision);
}

template <ExactField K>
bool contains(const TailSpan<K>& span, const Series<K>& s) {
  return span.contains(s);
}

template <ExactField K>
std::size_t codim(const TailSpan<K>& span) {
  return span.codim();
}

namespace detail {

template <ExactField K>
void check_same_space(const TailSpan<K>& a, const TailSpan<K>& b) {
  if (a.precision() != b.precision())
    throw PrecisionMismatch("span precisions differ: " + std::to_string(a.precision()) + " vs " +
                            std::to_string(b.precision()));
  if (!(a.field() == b.field())) throw Error("spans over different fields");
}

// Product of a and b with coefficients at exponents >= limit discarded.
template <ExactField K>
Series<K> mul_below(const Series<K>& a, const Series<K>& b, std::size_t limit) {
  Series<K> r(a.field(), a.precision());
  const std::size_t n = std::min(limit, a.precision());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace detail

template <ExactField K>
TailSpan<K> sum(const TailSpan<K>& a, const TailSpan<K>& b) {
  detail::check_same_space(a, b);
  std::vector<Series<K>> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  const std::size_t tail = std::min(a.tail(), b.tail());
  return TailSpan<K>::canonicalize(gens, tail, a.field(), a.precision());
}

/// Span of all products a*b with a in L1, b in L2.
template <ExactField K>
TailSpan<K> product_span(const TailSpan<K>& l1, const TailSpan<K>& l2) {
  detail::check_same_space(l1, l2);
  const std::size_t tail = std::min(l1.tail() + l2.min_valuation(), l2.tail() + l1.min_valuation());
  if (tail > l1.precision())
    throw PrecisionExhausted("product tail t^" + std::to_string(tail) + " exceeds precision " +
                             std::to_string(l1.precision()));
  std::vector<Series<K>> gens;
  gens.reserve(l1.basis().size() * l2.basis().size());
  for (const auto& a : l1.basis())
    for (const auto& b : l2.basis()) gens.push_back(detail::mul_below(a, b, tail));
  return TailSpan<K>::canonicalize(gens, tail, l1.field(), l1.precision());
}

/// (J : I) = { a in R : a*I is contained in J }, computed as the kernel of the map
/// a -> (a*g mod J) over a spanning set g of I.
template <ExactField K>
TailSpan<K> hom_space(const TailSpan<K>& i_span, const TailSpan<K>& j_span) {
  detail::check_same_space(i_span, j_span);
  const FieldSpec field = i_span.field();
  const std::size_t n = i_span.precision();
  const std::size_t cj = j_span.tail();
  const std::size_t vmin = i_span.min_valuation();
  const std::size_t h = cj > vmin ? cj - vmin : 0;

  std::vector<Series<K>> tests = i_span.basis();
  for (std::size_t k = i_span.tail(); k < cj; ++k) tests.push_back(Series<K>::monomial(field, n, k));

  // Incremental echelon over the image coordinates; each row carries the combination of unknowns.
  struct Row {
    std::vector<K> image;
    std::vector<K> combo;
    std::size_t pivot;
  };
  const K zero = K::from_int(field, 0);
  const std::size_t width = tests.size() * cj;
  std::vector<Row> rows;
  std::vector<Series<K>> kernel;
  for (std::size_t u = 0; u < h; ++u) {
    std::vector<K> image(width, zero);
    for (std::size_t g = 0; g < tests.size(); ++g) {
      Series<K> r = j_span.reduce(tests[g].shifted(u));
      for (std::size_t i = 0; i < cj; ++i) image[g * cj + i] = r[i];
    }
    std::vector<K> combo(h, zero);
    combo[u] = K::from_int(field, 1);
    for (const auto& row : rows) {
      if (image[row.pivot].is_zero()) continue;
      const K c = image[row.pivot];
      for (std::size_t i = row.pivot; i < width; ++i)
        if (!row.image[i].is_zero()) image[i] -= c * row.image[i];
      for (std::size_t i = 0; i < h; ++i)
        if (!row.combo[i].is_zero()) combo[i] -= c * row.combo[i];
    }
    std::size_t pivot = 0;
    while (pivot < width && image[pivot].is_zero()) ++pivot;
    if (pivot == width) {
      Series<K> a(field, n);
      for (std::size_t i = 0; i < h; ++i) a[i] = combo[i];
      kernel.push_back(std::move(a));
      continue;
    }
    const K inv = image[pivot].inverse();
    for (auto& x : image) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back(Row{std::move(image), std::move(combo), pivot});
  }
  return TailSpan<K>::canonicalize(kernel, h, field, n);
}

}  // namespace onebranch
