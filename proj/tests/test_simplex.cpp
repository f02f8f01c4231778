#include <doctest.h>

#include "adjmono/simplex.hpp"
#include "oracles.hpp"

using namespace adjmono;

namespace {

LinearConstraint row(std::vector<Rational> coeffs, Relation rel, Rational rhs,
                     bool strict = false) {
  return {std::move(coeffs), rel, std::move(rhs), strict};
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> num(-1000, 1000);
  std::uniform_int_distribution<Int> den(1, 1000);
  for (int i = 0; i < 500; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    // cross-multiplied forms must agree with the operator results
    Rational sum = a + b, prod = a * b;
    CHECK(sum == Rational(numerator(a) * denominator(b) + numerator(b) * denominator(a),
                          denominator(a) * denominator(b)));
    CHECK(prod == Rational(numerator(a) * numerator(b), denominator(a) * denominator(b)));
    CHECK(denominator(sum) > 0);
    CHECK(gcd(numerator(sum), denominator(sum)) == 1);
  }
  // fixed-width exponent arithmetic refuses to wrap
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Int>::max(), 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(std::numeric_limits<Int>::max() / 2, 3), std::overflow_error);
}

TEST_CASE("infeasible pair x >= 1, x <= 0") {
  auto res = simplex_feasible(
      1, {row({1}, Relation::GreaterEq, 1), row({1}, Relation::LessEq, 0)}, false);
  CHECK_FALSE(res.feasible);
  CHECK(res.point.empty());
}

TEST_CASE("one-dimensional simplex x + y = 1") {
  auto res = simplex_feasible(2, {row({1, 1}, Relation::Equal, 1)}, false);
  REQUIRE(res.feasible);
  CHECK(res.point[0] + res.point[1] == 1);
  CHECK(res.point[0] >= 0);
  CHECK(res.point[1] >= 0);
}

TEST_CASE("strict interior split of (2,1) + (1,1) across two copies of the maximal ideal") {
  // b interior to NP((1,0),(0,1)) and (2,1) - b interior as well:
  // b1 + b2 > 1, b1 + b2 < 2, 0 < b1 < 2, 0 < b2 < 1
  std::vector<LinearConstraint> rows = {
      row({1, 1}, Relation::GreaterEq, 1, true), row({1, 1}, Relation::LessEq, 2, true),
      row({1, 0}, Relation::GreaterEq, 0, true), row({0, 1}, Relation::GreaterEq, 0, true),
      row({1, 0}, Relation::LessEq, 2, true),    row({0, 1}, Relation::LessEq, 1, true)};
  auto res = simplex_feasible(2, rows, true);
  REQUIRE(res.feasible);
  REQUIRE(res.strictly_feasible);
  CHECK(res.slack > 0);
  const Rational b1 = res.point[0], b2 = res.point[1];
  CHECK(b1 + b2 > 1);
  CHECK(b1 + b2 < 2);
  CHECK(b1 > 0);
  CHECK(b2 > 0);
  CHECK(b1 < 2);
  CHECK(b2 < 1);
}

TEST_CASE("weakly feasible but strictly infeasible system") {
  // x <= 1 strictly against x >= 1: only x = 1 satisfies the weak relaxation
  auto res = simplex_feasible(
      1, {row({1}, Relation::LessEq, 1, true), row({1}, Relation::GreaterEq, 1)}, true);
  CHECK(res.feasible);
  CHECK_FALSE(res.strictly_feasible);
  CHECK(res.slack == 0);
}

TEST_CASE("redundant equalities exercise the artificial cleanup") {
  std::vector<LinearConstraint> rows = {row({1, 1}, Relation::Equal, 1),
                                        row({2, 2}, Relation::Equal, 2),
                                        row({3, 3}, Relation::Equal, 3)};
  auto res = simplex_feasible(2, rows, false);
  REQUIRE(res.feasible);
  CHECK(res.point[0] + res.point[1] == 1);
}

TEST_CASE("inconsistent equalities are infeasible") {
  auto res =
      simplex_feasible(2, {row({1, 1}, Relation::Equal, 1), row({1, 1}, Relation::Equal, 2)},
                       false);
  CHECK_FALSE(res.feasible);
}

TEST_CASE("negative right-hand sides are normalized") {
  // -x - y <= -3 is x + y >= 3
  auto res = simplex_feasible(2, {row({-1, -1}, Relation::LessEq, -3)}, false);
  REQUIRE(res.feasible);
  CHECK(res.point[0] + res.point[1] >= 3);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(simplex_feasible(2, {row({1}, Relation::LessEq, 1)}, false),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplex_feasible(1, {row({1}, Relation::Equal, 1, true)}, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(simplex_feasible(1, {row({1}, Relation::LessEq, 1, true)}, false),
                  std::invalid_argument);
}

TEST_CASE("random systems: returned points satisfy every row, slack is honest") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> nrows(1, 6), rel(0, 2), coef(-4, 4), rhs(-6, 6);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + static_cast<std::size_t>(iter % 4);
    std::vector<LinearConstraint> rows;
    bool any_strict = false;
    int m = nrows(rng);
    for (int i = 0; i < m; ++i) {
      LinearConstraint r;
      for (std::size_t j = 0; j < n; ++j) r.coeffs.emplace_back(coef(rng));
      r.rel = static_cast<Relation>(rel(rng));
      r.rhs = rhs(rng);
      if (r.rel != Relation::Equal && iter % 3 == 0) {
        r.strict = true;
        any_strict = true;
      }
      rows.push_back(std::move(r));
    }
    auto res = simplex_feasible(n, rows, any_strict);
    if (!res.feasible) continue;
    for (const auto& r : rows) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += r.coeffs[j] * res.point[j];
      Rational margin = r.strict ? res.slack : Rational(0);
      switch (r.rel) {
        case Relation::LessEq:
          CHECK(lhs <= r.rhs - margin);
          break;
        case Relation::GreaterEq:
          CHECK(lhs >= r.rhs + margin);
          break;
        case Relation::Equal:
          CHECK(lhs == r.rhs);
          break;
      }
    }
    for (const auto& q : res.point) CHECK(q >= 0);
  }
}
