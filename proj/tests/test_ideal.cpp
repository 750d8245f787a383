#include <doctest.h>

#include "onebranch/classify.hpp"
#include "onebranch/io.hpp"
#include "onebranch/n28.hpp"

using namespace onebranch;

namespace {

const FieldSpec F3{3};

Series<Fp> ser(const std::string& text, std::size_t n = 64) { return parse_series<Fp>(text, F3, n); }

}  // namespace

TEST_CASE("make_ideal") {
  const auto model = N28Model::build(F3, 64);
  const auto s3 = model.ring("S3");
  const auto r2 = make_ideal<Fp>(s3, {ser("1")}, 2);
  CHECK(r2.span().values() == std::vector<std::size_t>{0});
  CHECK(r2.span().tail() == 2);
  const auto r3s = make_ideal<Fp>(s3, {ser("1"), ser("t")}, 3);
  CHECK(r3s.span().values() == std::vector<std::size_t>{0, 1});
  CHECK(r3s.span().tail() == 3);
  CHECK(r3s == *s3_ideal(model, "R3*"));

  // closure under S3: <1, t> + t^6 R grows by t^3 * t = t^4 and t^5 * t = t^6
  const auto grown = make_ideal<Fp>(s3, {ser("1"), ser("t")}, 9);
  CHECK(grown.span().contains(ser("t^4")));
  CHECK_THROWS_AS(make_ideal<Fp>(s3, {ser("t")}, 5), NotNormalized);

  const auto w = std::make_shared<const Order<Fp>>(witness_ring<Fp>(F3, 32));
  const auto i = witness_ideal(w, 1, 2, 1);
  CHECK(i->span().contains(parse_series<Fp>("t+t^3+2t^4+t^8", F3, 32)));
  CHECK(i->span().contains(parse_series<Fp>("t^5", F3, 32)));
  CHECK(i->span().tail() == 9);
}

TEST_CASE("scale_ideal") {
  const auto model = N28Model::build(F3, 64);
  const auto& f9 = s2_layer_table("S4").families.front();
  REQUIRE(f9.label == "F9");
  const auto i = s2_family_ideal(model, "S4", f9, {{'a', 1}, {'b', 2}});
  CHECK(scale_ideal<Fp>(model.ring("S3"), *i).span() == model.ring("S4")->span());
  const auto r = model.ring("R");
  CHECK(scale_ideal<Fp>(r, *i).span() == r->span());
  const auto s3 = model.ring("S3");
  const FracIdeal<Fp> self(s3, s3->span());
  CHECK(scale_ideal<Fp>(s3, self) == self);
  CHECK_THROWS(scale_ideal<Fp>(model.ring("S2"), FracIdeal<Fp>(s3, s3->span())));
}

TEST_CASE("is_isomorphic") {
  const auto model = N28Model::build(F3, 64);
  const auto r3 = s3_ideal(model, "R3");
  const auto r3s = s3_ideal(model, "R3*");
  const auto same = is_isomorphic(*r3, *r3);
  CHECK(same.isomorphic);
  REQUIRE(same.witness);
  CHECK(*same.witness == Series<Fp>::one(F3, 64));
  CHECK_FALSE(is_isomorphic(*r3, *r3s).isomorphic);

  const auto w = std::make_shared<const Order<Fp>>(witness_ring<Fp>(F3, 32));
  CHECK_FALSE(is_isomorphic(*witness_ideal(w, 0, 0, 0), *witness_ideal(w, 1, 0, 0)).isomorphic);
  CHECK(is_isomorphic(*witness_ideal(w, 0, 0, 0), *witness_ideal(w, 0, 0, 0)).isomorphic);

  CHECK_THROWS_AS(is_isomorphic(*r3, FracIdeal<Fp>(model.ring("S2"), model.ring("S2")->span())), DifferentOrders);
}

TEST_CASE("isomorphism witness") {
  const auto model = N28Model::build(F3, 64);
  const auto s3 = model.ring("S3");
  // u * <1, t> + t^3 R normalized back is the same class
  const auto r3s = s3_ideal(model, "R3*");
  const auto u = ser("1+t+2t^2+t^5");
  std::vector<Series<Fp>> moved;
  for (const auto& b : r3s->span().basis()) moved.push_back(u * b);
  const auto j = normalize_ideal<Fp>(s3, TailSpan<Fp>::canonicalize(moved, r3s->span().tail(), F3, 64));
  const auto res = is_isomorphic(*r3s, j);
  REQUIRE(res.isomorphic);
  std::vector<Series<Fp>> image;
  for (const auto& b : r3s->span().basis()) {
    CHECK(j.span().contains(*res.witness * b));
    image.push_back(*res.witness * b);
  }
  CHECK(TailSpan<Fp>::canonicalize(image, r3s->span().tail(), F3, 64) == j.span());
}

TEST_CASE("normalize_ideal") {
  const auto model = N28Model::build(F3, 64);
  const auto s3 = model.ring("S3");
  // t^2 * R3*
  const auto shifted = TailSpan<Fp>::canonicalize({ser("t^2+t^4"), ser("t^3")}, 5, F3, 64);
  const auto n = normalize_ideal<Fp>(s3, shifted);
  CHECK(is_isomorphic(n, *s3_ideal(model, "R3*")).isomorphic);
}

TEST_CASE("generator_count") {
  const auto model = N28Model::build(F3, 64);
  const FracIdeal<Fp> s(model.s, model.s->span());
  CHECK(generator_count(s) == 1);
  const FracIdeal<Fp> r(model.s, model.ring("R")->span());
  CHECK(generator_count(r) == 5);
  CHECK(generator_count(r) == multiplicity(*model.s));
  for (const auto& name : s3_ideal_names()) {
    const auto i = s3_ideal(model, name);
    CHECK(generator_count(*i) >= 1);
    CHECK(generator_count(*i) <= multiplicity(i->order()));
  }
}
