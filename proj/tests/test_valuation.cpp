#include <doctest.h>

#include "adjmono/valuation.hpp"
#include "oracles.hpp"

using namespace adjmono;
using namespace testsupport;

namespace {

MonomialValuation val(std::vector<Int> ws) {
  std::vector<Integer> w;
  for (Int x : ws) w.emplace_back(x);
  return MonomialValuation(std::move(w));
}

const MonomialIdeal& adj_example() {
  static MonomialIdeal ideal(2, {{4, 0}, {3, 1}, {2, 2}, {1, 4}, {0, 5}});
  return ideal;
}

}  // namespace

TEST_CASE("monomial values are weighted degrees") {
  CHECK(value_of_monomial(val({3, 2}), {2, 2}) == 10);
  CHECK(value_of_monomial(val({1, 1}), {0, 0}) == 0);
  CHECK(value_of_monomial(val({7, 5}), {4, 2}) == 38);
  CHECK_THROWS_AS(value_of_monomial(val({1, 1}), {1}), std::invalid_argument);
}

TEST_CASE("ideal values are minima over the generators") {
  CHECK(value_of_ideal(val({3, 2}), adj_example()) == 10);
  CHECK(value_of_ideal(val({1, 1}), adj_example()) == 4);
  MonomialIdeal closure(2, {{5, 0}, {4, 2}, {3, 3}, {2, 5}, {1, 6}, {0, 7}});
  CHECK(value_of_ideal(val({7, 5}), closure) == 35);
  CHECK(value_of_ideal(val({1, 1}), MonomialIdeal::unit(2)) == 0);
}

TEST_CASE("jacobian values: weight sum minus weight gcd") {
  CHECK(jacobian_value(val({3, 2})) == 4);
  CHECK(jacobian_value(val({1, 0})) == 0);
  CHECK(jacobian_value(val({2, 4})) == 4);
}

TEST_CASE("valuation validation") {
  CHECK_THROWS_AS(val({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(val({-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialValuation({}), std::invalid_argument);
  CHECK(val({2, 4}).normalized() == false);
  CHECK(val({3, 2}).normalized());
}

TEST_CASE("rees valuations are the facet data") {
  MonomialIdeal closure(2, {{5, 0}, {4, 2}, {3, 3}, {2, 5}, {1, 6}, {0, 7}});
  auto rv = rees_valuations(closure);
  REQUIRE(rv.size() == 1);
  CHECK(rv[0].valuation == val({7, 5}));
  CHECK(rv[0].value == 35);

  auto rv2 = rees_valuations(adj_example());
  REQUIRE(rv2.size() == 2);
  CHECK(rv2[0].valuation == val({1, 1}));
  CHECK(rv2[0].value == 4);
  CHECK(rv2[1].valuation == val({3, 2}));
  CHECK(rv2[1].value == 10);

  auto principal = rees_valuations(MonomialIdeal(2, {{3, 0}}));
  REQUIRE(principal.size() == 1);
  CHECK(principal[0].valuation == val({1, 0}));
  CHECK(principal[0].value == 3);

  CHECK(rees_valuations(MonomialIdeal::unit(3)).empty());
}

TEST_CASE("necessity witnesses for the worked example") {
  auto witnesses = check_rees_necessity(adj_example());
  auto rv = rees_valuations(adj_example());
  REQUIRE(witnesses.size() == 2);
  for (std::size_t k = 0; k < witnesses.size(); ++k) {
    const auto& w = witnesses[k];
    CHECK(w.dropped_valuation == rv[k].valuation);
    CHECK(w.n >= 1);
    CHECK(value_of_monomial(w.dropped_valuation, w.e) < Integer(w.n) * rv[k].value);
    for (std::size_t m = 0; m < rv.size(); ++m)
      if (m != k)
        CHECK(value_of_monomial(rv[m].valuation, w.e) >= Integer(w.n) * rv[m].value);
  }
  CHECK(check_rees_necessity(MonomialIdeal::unit(2)).empty());

  // single facet: the empty remaining system is satisfied by any point
  auto single = check_rees_necessity(MonomialIdeal(2, {{5, 0}, {0, 7}}));
  REQUIRE(single.size() == 1);
  CHECK(value_of_monomial(single[0].dropped_valuation, single[0].e) < Integer(single[0].n) * 35);
}

TEST_CASE("values are multiplicative over products and powers") {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 40; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal a = random_ideal(rng, d, 5, 7);
    MonomialIdeal b = random_ideal(rng, d, 5, 7);
    for (int t = 0; t < 5; ++t) {
      MonomialValuation v = random_valuation(rng, d, 6);
      CHECK(value_of_ideal(v, product(a, b)) == value_of_ideal(v, a) + value_of_ideal(v, b));
    }
    Int n = 1 + static_cast<Int>(rng() % 3);
    MonomialValuation v = random_valuation(rng, d, 6);
    CHECK(value_of_ideal(v, power(a, n)) == Integer(n) * value_of_ideal(v, a));
  }
}

TEST_CASE("rees valuations of powers: same weights, scaled values") {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 25; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal a = random_ideal(rng, d, 5, 6);
    Int n = 2 + static_cast<Int>(rng() % 3);
    auto base = rees_valuations(a);
    auto scaled = rees_valuations(power(a, n));
    REQUIRE(base.size() == scaled.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      CHECK(base[k].valuation == scaled[k].valuation);
      CHECK(scaled[k].value == Integer(n) * base[k].value);
    }
  }
}

TEST_CASE("normalized rees valuations attain the minimal jacobian value") {
  std::mt19937_64 rng(73);
  for (int iter = 0; iter < 30; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal a = random_ideal(rng, d, 6, 8);
    for (const auto& rv : rees_valuations(a)) {
      CHECK(rv.valuation.normalized());
      Integer sum = 0;
      for (const auto& w : rv.valuation.weights()) sum += w;
      CHECK(jacobian_value(rv.valuation) == sum - 1);
    }
  }
}

TEST_CASE("necessity witnesses verify on random ideals") {
  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 25; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal a = random_ideal(rng, d, 6, 8);
    auto rv = rees_valuations(a);
    auto witnesses = check_rees_necessity(a);
    REQUIRE(witnesses.size() == rv.size());
    for (std::size_t k = 0; k < witnesses.size(); ++k) {
      const auto& w = witnesses[k];
      CHECK(value_of_monomial(w.dropped_valuation, w.e) < Integer(w.n) * rv[k].value);
      for (std::size_t m = 0; m < rv.size(); ++m)
        if (m != k)
          CHECK(value_of_monomial(rv[m].valuation, w.e) >= Integer(w.n) * rv[m].value);
    }
  }
}
