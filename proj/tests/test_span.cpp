#include <doctest.h>

#include <random>

#include "onebranch/io.hpp"
#include "onebranch/n28.hpp"
#include "oracles.hpp"

using namespace onebranch;

namespace {

const FieldSpec F3{3};

Series<Fp> ser(const std::string& text, std::size_t n = 32) { return parse_series<Fp>(text, F3, n); }

TailSpan<Fp> span(std::initializer_list<const char*> gens, std::size_t tail, std::size_t n = 32) {
  std::vector<Series<Fp>> g;
  for (auto s : gens) g.push_back(ser(s, n));
  return TailSpan<Fp>::canonicalize(g, tail, F3, n);
}

std::vector<std::size_t> vals(const TailSpan<Fp>& s) { return s.values(); }

}  // namespace

TEST_CASE("canonicalize") {
  const auto a = span({"1", "t^3", "1+t^3"}, 5);
  CHECK(vals(a) == std::vector<std::size_t>{0, 3});
  CHECK(a.tail() == 5);
  CHECK(a.basis()[0] == ser("1"));

  const auto b = span({"t+t^2", "t^2"}, 4);
  CHECK(vals(b) == std::vector<std::size_t>{1, 2});
  CHECK(b.basis()[0] == ser("t"));
  CHECK(b.tail() == 4);

  // rows are reduced at the other pivots and zero from the tail on
  const auto c = span({"1+t+t^6", "t+2t^2"}, 5);
  CHECK(c.basis()[0] == ser("1+t^2"));
  CHECK(c.basis()[1] == ser("t+2t^2"));

  // a row t^(c-1) is absorbed into the tail
  const auto d = span({"1", "t^4"}, 5);
  CHECK(d.tail() == 4);
  CHECK(vals(d) == std::vector<std::size_t>{0});

  // empty input is the pure tail
  const auto e = TailSpan<Fp>::canonicalize({}, 7, F3, 32);
  CHECK(e.basis().empty());
  CHECK(e.codim() == 7);
  CHECK_THROWS_AS(TailSpan<Fp>(F3, 8, 9), PrecisionExhausted);
}

TEST_CASE("multiplicative closure of 1, t^3, t^5 below 8") {
  auto cur = span({"1", "t^3", "t^5"}, 8);
  while (true) {
    std::vector<Series<Fp>> next = cur.basis();
    for (const auto& a : cur.basis())
      for (const auto& b : cur.basis()) next.push_back(a * b);
    auto grown = TailSpan<Fp>::canonicalize(next, 8, F3, 32);
    if (grown == cur) break;
    cur = grown;
  }
  CHECK(vals(cur) == std::vector<std::size_t>{0, 3, 5, 6});
  const auto leads = oracle::closure_values({oracle::to_poly(ser("t^3")), oracle::to_poly(ser("t^5"))}, 8, 3);
  const auto v = vals(cur);
  CHECK(std::set<std::size_t>(v.begin(), v.end()) == leads);
}

TEST_CASE("contains") {
  const auto model = N28Model::build(F3, 64);
  const auto& s0 = model.ring("S0")->span();
  CHECK(s0.contains(Series<Fp>(F3, 64)));
  CHECK_FALSE(s0.contains(Series<Fp>::monomial(F3, 64, 22)));
  CHECK(s0.contains(Series<Fp>::monomial(F3, 64, 23)));
  for (const auto& b : s0.basis()) CHECK(s0.contains(b));
  CHECK(s0.contains(Series<Fp>::monomial(F3, 64, s0.tail())));
  CHECK(vals(s0) == std::vector<std::size_t>{0, 5, 8, 10, 13, 15, 16, 18, 20, 21});
}

TEST_CASE("sum and product_span") {
  CHECK(sum(span({"1"}, 3), span({"t"}, 3)) == span({"1", "t"}, 3));

  const auto model = N28Model::build(F3, 64);
  const auto m2 = radical(*model.ring("S2"));
  const auto s4 = model.ring("S4")->span();
  const auto prod = product_span(m2, s4);
  CHECK(vals(prod) == std::vector<std::size_t>{5, 8});
  CHECK(prod.tail() == 10);
  CHECK(prod.basis()[0] == Series<Fp>::monomial(F3, 64, 5));
  CHECK(prod.basis()[1] == Series<Fp>::monomial(F3, 64, 8));

  const auto whole = TailSpan<Fp>::whole(F3, 64);
  const auto t5 = product_span(m2, whole);
  CHECK(t5.basis().empty());
  CHECK(t5.tail() == 5);
}

TEST_CASE("hom_space") {
  const auto model = N28Model::build(F3, 64);
  const auto& s3 = model.ring("S3")->span();
  CHECK(hom_space(s3, s3).contains(Series<Fp>::one(F3, 64)));
  CHECK(hom_space(s3, s3) == s3);

  const auto cond = hom_space(TailSpan<Fp>::whole(F3, 64), s3);
  CHECK(cond.basis().empty());
  CHECK(cond.tail() == 8);

  const auto r2 = s3_ideal(model, "R2");
  const auto r3s = s3_ideal(model, "R3*");
  CHECK(vals(r2->span()) == std::vector<std::size_t>{0});
  CHECK(r2->span().tail() == 2);
  CHECK(hom_space(r2->span(), r3s->span()).min_valuation() > 0);
  CHECK_FALSE(is_isomorphic(*r2, *r3s).isomorphic);
}

TEST_CASE("codim") {
  CHECK(TailSpan<Fp>::whole(F3, 16).codim() == 0);
  CHECK(span({"1", "t^3", "t^5", "t^6"}, 8).codim() == 4);
  const auto n28 = N28Model::build(F3, 64);
  CHECK(n28.s->codim() == oracle::gaps({5, 8}).size());
  CHECK(oracle::gaps({5, 8}) == std::vector<int>{1, 2, 3, 4, 6, 7, 9, 11, 12, 14, 17, 19, 22, 27});
}

TEST_CASE("span JSON") {
  const auto s = span({"1", "t^3+t^4", "t^5"}, 7);
  const auto j = span_to_json(s);
  CHECK(j.at("tail") == 7);
  CHECK(j.at("precision") == 32);
  CHECK(j.at("field") == "F3");
  CHECK(span_from_json<Fp>(j, FieldSpec{5}, 16) == s);
  const auto shorthand = nlohmann::json::parse(R"({"basis":["1","t^3"],"tail":5})");
  CHECK(span_from_json<Fp>(shorthand, F3, 32) == span({"1", "t^3"}, 5));
  CHECK(field_of_json(shorthand, FieldSpec{7}).p == 7u);
}

TEST_CASE("span laws on random inputs") {
  std::mt19937_64 rng(11);
  auto random_series = [&](std::size_t n, std::size_t lo) {
    Series<Fp> s(F3, n);
    for (std::size_t i = lo; i < n; ++i)
      if (rng() % 3 == 0) s[i] = Fp(1 + rng() % 2, 3);
    return s;
  };
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 24, tail = 6 + rng() % 12;
    std::vector<Series<Fp>> g;
    for (int k = 0, m = 1 + rng() % 5; k < m; ++k) g.push_back(random_series(n, rng() % 4));
    const auto s = TailSpan<Fp>::canonicalize(g, tail, F3, n);
    std::vector<oracle::Poly> rows;
    for (const auto& x : g) rows.push_back(oracle::to_poly(x));
    const auto rs = oracle::row_space(rows, tail, 3);
    // the canonical basis and the oracle agree before the tail collapses
    const auto v = s.values();
    std::set<std::size_t> got(v.begin(), v.end());
    for (std::size_t v = s.tail(); v < tail; ++v) got.insert(v);
    CHECK(got == rs.leads);
    const auto a = TailSpan<Fp>::canonicalize({random_series(n, 1)}, 10, F3, n);
    const auto b = TailSpan<Fp>::canonicalize({random_series(n, 2), random_series(n, 3)}, 12, F3, n);
    CHECK(product_span(a, b) == product_span(b, a));
    CHECK(sum(sum(a, b), s) == sum(a, sum(b, s)));
    CHECK(sum(a, b) == sum(b, a));
    const auto h = hom_space(a, b);
    for (const auto& x : h.basis())
      for (const auto& y : a.basis()) CHECK(b.contains(x * y));
  }
}
