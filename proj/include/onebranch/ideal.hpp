#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "onebranch/order.hpp"

namespace onebranch {

/// A fractional ideal of an order S, normalized so that S is contained in I and I in R.
template <ExactField K>
class FracIdeal {
 public:
  using OrderPtr = std::shared_ptr<const Order<K>>;

  /// Checks S*I in I and 1 in I.
  FracIdeal(OrderPtr over, TailSpan<K> span) : over_(std::move(over)), span_(std::move(span)) {
    if (!span_.contains(Series<K>::one(span_.field(), span_.precision())))
      throw NotNormalized("ideal does not contain 1");
    if (!(product_span(over_->span(), span_) == span_)) throw Error("span is not a module over the order");
  }

  const Order<K>& order() const { return *over_; }
  const OrderPtr& order_ptr() const { return over_; }
  const TailSpan<K>& span() const { return span_; }
  std::size_t codim() const { return span_.codim(); }

  bool operator==(const FracIdeal& o) const { return span_ == o.span_ && order().span() == o.order().span(); }

 private:
  OrderPtr over_;
  TailSpan<K> span_;
};

/// Smallest S-submodule of R containing span.
template <ExactField K>
TailSpan<K> module_closure(const Order<K>& s, TailSpan<K> span) {
  while (true) {
    TailSpan<K> next = product_span(s.span(), span);
    if (next == span) return span;
    span = std::move(next);
  }
}

/// S-module generated by gens and t^tail R; throws NotNormalized if 1 is not in it.
template <ExactField K>
FracIdeal<K> make_ideal(typename FracIdeal<K>::OrderPtr s, const std::vector<Series<K>>& gens, std::size_t tail) {
  auto span = TailSpan<K>::canonicalize(gens, tail, s->field(), s->precision());
  span = module_closure(*s, std::move(span));
  if (!span.contains(Series<K>::one(s->field(), s->precision())))
    throw NotNormalized("generated module does not contain 1");
  return FracIdeal<K>(std::move(s), std::move(span));
}

/// I' = S' I for an over-ring S' of the order of I.
template <ExactField K>
FracIdeal<K> scale_ideal(typename FracIdeal<K>::OrderPtr over, const FracIdeal<K>& ideal) {
  if (!over->span().contains(ideal.order().span())) throw Error("scale_ideal: target is not an over-ring");
  return FracIdeal<K>(over, product_span(over->span(), ideal.span()));
}

/// Rescales an arbitrary nonzero S-submodule of R into the normalized form S in I in R
/// by dividing by its canonical row of least valuation.
template <ExactField K>
FracIdeal<K> normalize_ideal(typename FracIdeal<K>::OrderPtr s, const TailSpan<K>& span) {
  const std::size_t n = span.precision();
  if (span.basis().empty() && span.tail() == 0) return FracIdeal<K>(std::move(s), span);
  const std::size_t v = span.min_valuation();
  Series<K> lead = span.basis().empty() ? Series<K>::monomial(span.field(), n, v) : span.basis().front();
  const Series<K> unit_inv = invert_unit(lead.unshifted(v));
  std::vector<Series<K>> gens;
  for (const auto& b : span.basis()) gens.push_back((b.unshifted(v) * unit_inv).truncated(span.tail() - v));
  auto out = TailSpan<K>::canonicalize(gens, span.tail() - v, span.field(), n);
  return FracIdeal<K>(std::move(s), std::move(out));
}

template <ExactField K>
struct IsoResult {
  bool isomorphic = false;
  std::optional<Series<K>> witness;  // a with a*I = J
};

/// Normalized ideals I, J are isomorphic iff Hom(I, J) holds a unit and codim I = codim J.
template <ExactField K>
IsoResult<K> is_isomorphic(const FracIdeal<K>& i, const FracIdeal<K>& j) {
  if (&i.order() != &j.order() && !(i.order().span() == j.order().span()))
    throw DifferentOrders("ideals over different orders");
  if (i.codim() != j.codim()) return {};
  auto hom = hom_space(i.span(), j.span());
  if (hom.min_valuation() != 0) return {};
  if (hom.basis().empty()) return {true, Series<K>::one(i.span().field(), i.span().precision())};
  return {true, hom.basis().front()};
}

/// dim I / (rad S) I.
template <ExactField K>
std::size_t generator_count(const FracIdeal<K>& ideal) {
  return product_span(radical(ideal.order()), ideal.span()).codim() - ideal.codim();
}

}  // namespace onebranch
