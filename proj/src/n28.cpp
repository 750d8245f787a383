#include "onebranch/n28.hpp"

#include <stdexcept>

#include "onebranch/expr.hpp"

namespace onebranch {

namespace {

TailSpan<Fp> span_of(const std::vector<std::string>& gens, std::size_t tail, FieldSpec field, std::size_t n) {
  ExprEvaluator<Fp> ev(field, n, {});
  std::vector<Series<Fp>> s;
  for (const auto& g : gens) s.push_back(ev(g));
  return TailSpan<Fp>::canonicalize(s, tail, field, n);
}

}  // namespace

N28Model N28Model::build(FieldSpec field, std::size_t precision) {
  N28Model m{field, precision, nullptr, {}};
  m.s = std::make_shared<const Order<Fp>>(order_from_generators<Fp>(
      {Series<Fp>::monomial(field, precision, 5), Series<Fp>::monomial(field, precision, 8)}, field, precision));
  for (auto& o : end_chain(*m.s)) m.chain.push_back(std::make_shared<const Order<Fp>>(std::move(o)));
  if (m.chain.size() != 7) throw Error("unexpected end chain length " + std::to_string(m.chain.size()));
  return m;
}

OrderPtr N28Model::ring(const std::string& name) const {
  if (name == "S") return s;
  if (name == "T") return chain.at(5);
  if (name == "R") return chain.at(6);
  if (name.size() == 2 && name[0] == 'S' && name[1] >= '0' && name[1] <= '4') return chain.at(name[1] - '0');
  throw std::out_of_range("unknown ring " + name);
}

const std::vector<std::string>& displayed_chain_names() {
  static const std::vector<std::string> names{"S0", "S1", "S2", "S3", "S4"};
  return names;
}

TailSpan<Fp> displayed_chain_span(const std::string& name, FieldSpec field, std::size_t n) {
  if (name == "S0") return span_of({"1", "x", "y", "x^2", "xy", "x^3", "y^2", "x^2y", "x^4", "xy^2"}, 23, field, n);
  if (name == "S1") return span_of({"1", "x", "y", "x^2", "xy", "x^3", "y^2"}, 18, field, n);
  if (name == "S2") return span_of({"1", "x", "y", "x^2", "tx^2"}, 13, field, n);
  if (name == "S3") return span_of({"1", "z", "x"}, 8, field, n);
  if (name == "S4") return span_of({"1", "z"}, 5, field, n);
  throw std::out_of_range("no displayed span for " + name);
}

const std::vector<std::string>& s3_ideal_names() {
  static const std::vector<std::string> names{"S3", "S4", "S4*", "R2", "R3", "R3*", "R"};
  return names;
}

std::shared_ptr<const Ideal> s3_ideal(const N28Model& model, const std::string& name) {
  const auto s3 = model.ring("S3");
  const auto f = model.field;
  const auto n = model.precision;
  TailSpan<Fp> span = s3->span();
  if (name == "S3") span = s3->span();
  else if (name == "S4") span = span_of({"1", "z"}, 5, f, n);
  else if (name == "S4*") span = span_of({"1", "t^2", "t^3"}, 5, f, n);
  else if (name == "R2") span = span_of({"1"}, 2, f, n);
  else if (name == "R3") span = span_of({"1"}, 3, f, n);
  else if (name == "R3*") span = span_of({"1", "t"}, 3, f, n);
  else if (name == "R") span = TailSpan<Fp>::whole(f, n);
  else throw std::out_of_range("unknown S3-ideal " + name);
  return std::make_shared<const Ideal>(s3, std::move(span));
}

TailSpan<Fp> layer_tilde(const N28Model& model, const std::string& layer) {
  return product_span(radical(*model.ring("S2")), s3_ideal(model, layer)->span());
}

std::shared_ptr<const Ideal> s2_family_ideal(const N28Model& model, const std::string& layer, const FamilyDef& family,
                                             const ParamValues& params) {
  const auto tilde = layer_tilde(model, layer);
  std::vector<Series<Fp>> gens = tilde.basis();
  gens.push_back(Series<Fp>::one(model.field, model.precision));
  for (auto& g : family_generators(family, params, model.field, model.precision)) gens.push_back(std::move(g));
  return std::make_shared<const Ideal>(make_ideal<Fp>(model.ring("S2"), gens, tilde.tail()));
}

}  // namespace onebranch
