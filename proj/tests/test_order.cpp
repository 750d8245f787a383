#include <doctest.h>

#include "onebranch/io.hpp"
#include "onebranch/n28.hpp"
#include "oracles.hpp"

using namespace onebranch;

namespace {

const FieldSpec F3{3};

Order<Fp> gen_order(std::initializer_list<const char*> gens, std::size_t n = 64, FieldSpec f = F3) {
  std::vector<Series<Fp>> g;
  for (auto s : gens) g.push_back(parse_series<Fp>(s, f, n));
  return order_from_generators<Fp>(g, f, n);
}

using Values = std::vector<std::size_t>;

}  // namespace

TEST_CASE("order_from_generators") {
  const auto n28 = gen_order({"t^5", "t^8"});
  CHECK(n28.conductor() == 28);
  CHECK(static_cast<int>(n28.conductor()) == oracle::frobenius_two(5, 8) + 1);
  CHECK(n28.semigroup() == oracle::values_below_conductor({5, 8}));

  const auto r = gen_order({"t"}, 16);
  CHECK(r.is_whole());
  CHECK(r.conductor() == 0);

  const auto s3 = gen_order({"t^3", "t^5"}, 32);
  CHECK(s3.semigroup() == Values{0, 3, 5, 6});
  CHECK(s3.conductor() == 8);
}

TEST_CASE("conductor matches the two-generator formula") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 7}, {3, 16}, {3, 17}, {4, 7}, {4, 9},
                                                       {4, 11}, {5, 6}, {5, 7}, {5, 9}, {6, 7}, {7, 9}}) {
    const std::size_t c = static_cast<std::size_t>(oracle::frobenius_two(a, b) + 1);
    const std::size_t n = 2 * c + 8;
    const auto s = order_from_generators<Fp>(
        {Series<Fp>::monomial(F3, n, a), Series<Fp>::monomial(F3, n, b)}, F3, n);
    CHECK(s.conductor() == c);
    CHECK(s.codim() == oracle::gaps({a, b}).size());
    CHECK(s.semigroup() == oracle::values_below_conductor({a, b}));
    CHECK(multiplicity(s) == static_cast<std::size_t>(a));
  }
}

TEST_CASE("non-monomial generators") {
  // x = t^5 + t^6 has the same semigroup, found by closure rather than formula
  const auto s = gen_order({"t^5+t^6", "t^8"});
  CHECK(s.conductor() == 28);
  CHECK(s.semigroup() == oracle::values_below_conductor({5, 8}));
  CHECK_FALSE(s.contains(parse_series<Fp>("t^5", F3, 64)));
  // t^4, t^10 + t^11 generates <4,10,21>
  const auto w = gen_order({"t^4", "t^10+t^11"});
  CHECK(w.semigroup() == oracle::values_below_conductor({4, 10, 21}));
  CHECK(w.conductor() == 28);
  CHECK(gen_order({"t^2", "t^3"}, 8).conductor() == 2);
}

TEST_CASE("precision exhausted") {
  CHECK_THROWS_AS(gen_order({"t^5", "t^8"}, 24), PrecisionExhausted);
  CHECK_THROWS_AS(gen_order({"t^4", "t^10"}), PrecisionExhausted);  // gcd 2, no conductor
}

TEST_CASE("from_span validates") {
  const auto bad = TailSpan<Fp>::canonicalize({Series<Fp>::one(F3, 16), Series<Fp>::monomial(F3, 16, 3)}, 10, F3, 16);
  CHECK_THROWS_AS(Order<Fp>::from_span(bad), NotARing);
  const auto no_one = TailSpan<Fp>::canonicalize({Series<Fp>::monomial(F3, 16, 3)}, 5, F3, 16);
  CHECK_THROWS_AS(Order<Fp>::from_span(no_one), NotARing);
}

TEST_CASE("radical") {
  const auto r = Order<Fp>::whole(F3, 16);
  const auto rr = radical(r);
  CHECK(rr.basis().empty());
  CHECK(rr.tail() == 1);

  const auto n28 = gen_order({"t^5", "t^8"});
  const auto m = radical(n28);
  CHECK(m.values() == Values{5, 8, 10, 13, 15, 16, 18, 20, 21, 23, 24, 25, 26});
  CHECK(m.tail() == 28);

  const auto model = N28Model::build(F3, 64);
  const auto m4 = radical(*model.ring("S4"));
  CHECK(m4.values() == Values{3});
  CHECK(m4.tail() == 5);
}

TEST_CASE("end_ring") {
  const auto model = N28Model::build(F3, 64);
  const auto s0 = end_ring(radical(*model.s));
  CHECK(s0.semigroup() == Values{0, 5, 8, 10, 13, 15, 16, 18, 20, 21});
  CHECK(s0.conductor() == 23);
  // S0 = S + <t^27>
  CHECK(s0.span() == sum(model.s->span(), TailSpan<Fp>::canonicalize({Series<Fp>::monomial(F3, 64, 27)}, 64, F3, 64)));

  const auto s4 = end_ring(radical(*model.ring("S3")));
  CHECK(s4.semigroup() == Values{0, 3});
  CHECK(s4.conductor() == 5);

  const auto s3 = end_ring(radical(*model.ring("S2")));
  CHECK(s3.semigroup() == Values{0, 3, 5, 6});
  CHECK(s3.conductor() == 8);
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(gen_order({"t^5", "t^8"})) == 5);
  CHECK(multiplicity(Order<Fp>::whole(F3, 16)) == 1);
  CHECK(multiplicity(gen_order({"t^3", "t^16"}, 80)) == 3);
}

TEST_CASE("end_chain") {
  const auto model = N28Model::build(F3, 64);
  const auto chain = end_chain(*model.s);
  // S0, S1, S2, S3, S4, K + t^2 R, R
  REQUIRE(chain.size() == 7);
  const std::vector<Values> want{{0, 5, 8, 10, 13, 15, 16, 18, 20, 21}, {0, 5, 8, 10, 13, 15, 16}, {0, 5, 8, 10, 11},
                                 {0, 3, 5, 6}, {0, 3}, {0}, {}};
  const std::vector<std::size_t> tails{23, 18, 13, 8, 5, 2, 0};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK(chain[i].semigroup() == want[i]);
    CHECK(chain[i].conductor() == tails[i]);
    CHECK(chain[i].span().contains(i == 0 ? model.s->span() : chain[i - 1].span()));
  }
  CHECK(end_chain(Order<Fp>::whole(F3, 16)).empty());

  const auto from_s3 = end_chain(*model.ring("S3"));
  REQUIRE(from_s3.size() == 3);
  CHECK(from_s3[0].semigroup() == Values{0, 3});
  CHECK(from_s3[1].semigroup() == Values{0});
  CHECK(from_s3[2].is_whole());
}

TEST_CASE("displayed chain spans") {
  const auto model = N28Model::build(F3, 64);
  for (const auto& name : displayed_chain_names()) {
    const auto shown = displayed_chain_span(name, F3, 64);
    if (name == "S3")
      CHECK_FALSE(shown == model.ring(name)->span());
    else
      CHECK(shown == model.ring(name)->span());
  }
}

TEST_CASE("chain is stable under more precision") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const auto a = N28Model::build(FieldSpec{p}, 64);
    const auto b = N28Model::build(FieldSpec{p}, 72);
    REQUIRE(a.chain.size() == b.chain.size());
    for (std::size_t i = 0; i < a.chain.size(); ++i) CHECK(a.chain[i]->span().same_subspace(b.chain[i]->span()));
  }
}

TEST_CASE("rational orders") {
  const FieldSpec q{0};
  const auto s = order_from_generators<Rational>(
      {parse_series<Rational>("t^5+t^6", q, 64), parse_series<Rational>("t^8", q, 64)}, q, 64);
  CHECK(s.conductor() == 28);
  CHECK(end_chain(s).size() == 7);
}
