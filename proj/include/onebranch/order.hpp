#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "onebranch/errors.hpp"
#include "onebranch/span.hpp"

namespace onebranch {

/// Valuations (v1, v2) of the two generators of the maximal ideal of a plane branch.
struct ValuationVector {
  int v1 = 0;
  int v2 = 0;

  /// Throws InvalidVector unless 0 < v1 < v2 and v1 does not divide v2.
  static ValuationVector make(int v1, int v2) {
    if (v1 <= 0 || v1 >= v2 || v2 % v1 == 0)
      throw InvalidVector("invalid valuation vector (" + std::to_string(v1) + "," + std::to_string(v2) +
                          "): need 0 < v1 < v2 and v1 not dividing v2");
    return ValuationVector{v1, v2};
  }

  friend bool operator==(const ValuationVector&, const ValuationVector&) = default;
};

/// Complete local subalgebra S of R = K[[t]] with t^c R contained in S.
template <ExactField K>
class Order {
 public:
  /// Validates that span is a subring with 1; throws NotARing otherwise.
  static Order from_span(TailSpan<K> span) {
    Order out(std::move(span));
    out.validate();
    return out;
  }

  /// R itself.
  static Order whole(FieldSpec field, std::size_t precision) {
    return Order(TailSpan<K>::whole(field, precision));
  }

  const TailSpan<K>& span() const { return span_; }
  FieldSpec field() const { return span_.field(); }
  std::size_t precision() const { return span_.precision(); }

  /// Smallest c with t^c R in S.
  std::size_t conductor() const { return span_.tail(); }

  /// Elements of the value semigroup below the conductor, increasing (starts with 0).
  std::vector<std::size_t> semigroup() const {
    if (span_.tail() == 0) return {};
    return span_.values();
  }

  bool has_value(std::size_t v) const { return span_.has_value(v); }
  bool is_whole() const { return span_.tail() == 0; }
  std::size_t codim() const { return span_.codim(); }

  bool contains(const Series<K>& s) const { return span_.contains(s); }

  bool operator==(const Order& o) const { return span_ == o.span_; }

 private:
  explicit Order(TailSpan<K> span) : span_(std::move(span)) {}

  void validate() const {
    const auto one = Series<K>::one(field(), precision());
    if (!span_.contains(one)) throw NotARing("span does not contain 1");
    const auto& b = span_.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i; j < b.size(); ++j)
        if (!span_.contains(detail::mul_below(b[i], b[j], span_.tail())))
          throw NotARing("span is not closed under multiplication (valuations " +
                         std::to_string(*b[i].valuation()) + ", " + std::to_string(*b[j].valuation()) + ")");
  }

  TailSpan<K> span_;
};

/// Smallest order containing the given elements, found by closing K + span(gens) under
/// multiplication modulo t^N until the canonical span is stable. The conductor is read off
/// the stabilized span; it is accepted only when conductor + multiplicity <= N, which
/// guarantees that the whole tail t^c R lies in the order.
template <ExactField K>
Order<K> order_from_generators(const std::vector<Series<K>>& gens, FieldSpec field, std::size_t precision) {
  const std::size_t n = precision;
  std::vector<Series<K>> seed{Series<K>::one(field, n)};
  for (const auto& g : gens) {
    if (g.precision() != n) throw PrecisionMismatch("generator precision differs from session precision");
    seed.push_back(g);
  }
  TailSpan<K> cur = TailSpan<K>::canonicalize(seed, n, field, n);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<Series<K>> next = cur.basis();
    for (const auto& g : gens)
      for (const auto& b : cur.basis()) next.push_back(g * b);
    TailSpan<K> grown = TailSpan<K>::canonicalize(next, cur.tail(), field, n);
    if (grown.tail() == cur.tail() && grown == cur) break;
    cur = std::move(grown);
  }
  const std::size_t c = cur.tail();
  std::size_t m = c;
  for (auto v : cur.pivots())
    if (v > 0) {
      m = v;
      break;
    }
  if (c == n || (c > 0 && c + m > n))
    throw PrecisionExhausted("closure did not stabilize: conductor " + std::to_string(c) + " with multiplicity " +
                             std::to_string(m) + " needs precision > " + std::to_string(n));
  return Order<K>::from_span(std::move(cur));
}

/// Maximal ideal: all elements of positive valuation.
template <ExactField K>
TailSpan<K> radical(const Order<K>& s) {
  std::vector<Series<K>> rows;
  for (const auto& b : s.span().basis())
    if (*b.valuation() > 0) rows.push_back(b);
  return TailSpan<K>::canonicalize(rows, std::max<std::size_t>(s.conductor(), 1), s.field(), s.precision());
}

/// End(M) = { a : a M in M }, validated as an order.
template <ExactField K>
Order<K> end_ring(const TailSpan<K>& m) {
  if (m.tail() == m.precision() && m.basis().empty()) throw Error("end_ring of the zero module");
  return Order<K>::from_span(hom_space(m, m));
}

/// dim R / (rad S) R, i.e. the smallest positive value of S.
template <ExactField K>
std::size_t multiplicity(const Order<K>& s) {
  return product_span(radical(s), TailSpan<K>::whole(s.field(), s.precision())).codim();
}

/// S_1 = End(rad S), S_2 = End(rad S_1), ... up to and including R. Empty for S = R.
template <ExactField K>
std::vector<Order<K>> end_chain(const Order<K>& s) {
  std::vector<Order<K>> chain;
  Order<K> cur = s;
  const std::size_t guard = s.codim() + 1;
  while (!cur.is_whole()) {
    if (chain.size() > guard) throw Error("end_chain did not terminate");
    Order<K> next = end_ring(radical(cur));
    if (next.codim() >= cur.codim()) throw NotARing("End(rad S) is not strictly larger than S");
    chain.push_back(next);
    cur = std::move(next);
  }
  return chain;
}

}  // namespace onebranch
