#include <doctest.h>

#include "adjmono/polyhedron.hpp"
#include "oracles.hpp"

using namespace adjmono;
using namespace testsupport;

namespace {

const MonomialIdeal& closure57() {
  static MonomialIdeal ideal(2, {{5, 0}, {4, 2}, {3, 3}, {2, 5}, {1, 6}, {0, 7}});
  return ideal;
}

std::vector<Rational> pt(std::vector<Rational> v) { return v; }

}  // namespace

TEST_CASE("newton polyhedron of the worked staircases") {
  NewtonPolyhedron np = newton_polyhedron(closure57());
  REQUIRE(np.facets().size() == 1);
  CHECK(np.facets()[0].normal == std::vector<Integer>{7, 5});
  CHECK(np.facets()[0].offset == 35);

  NewtonPolyhedron unit_np = newton_polyhedron(MonomialIdeal::unit(2));
  CHECK(unit_np.facets().empty());

  MonomialIdeal adj(2, {{4, 0}, {3, 1}, {2, 2}, {1, 4}, {0, 5}});
  NewtonPolyhedron adj_np = newton_polyhedron(adj);
  REQUIRE(adj_np.facets().size() == 2);
  CHECK(adj_np.facets()[0].normal == std::vector<Integer>{1, 1});
  CHECK(adj_np.facets()[0].offset == 4);
  CHECK(adj_np.facets()[1].normal == std::vector<Integer>{3, 2});
  CHECK(adj_np.facets()[1].offset == 10);
}

TEST_CASE("weak and strict membership") {
  NewtonPolyhedron np = newton_polyhedron(closure57());
  CHECK(np_member(np, pt({3, 3}), false));        // 21 + 15 = 36 >= 35
  CHECK_FALSE(np_member(np, pt({5, 0}), true));   // boundary, zero coordinate
  CHECK(np_member(np, pt({5, 1}), true));         // 40 > 35, both positive
  CHECK_FALSE(np_member(np, pt({Rational(-1), 9}), false));
  CHECK_THROWS_AS(np_member(np, pt({1}), false), std::invalid_argument);

  NewtonPolyhedron unit_np = newton_polyhedron(MonomialIdeal::unit(2));
  CHECK(np_member(unit_np, pt({0, 0}), false));
  CHECK_FALSE(np_member(unit_np, pt({0, 1}), true));
  CHECK(np_member(unit_np, pt({Rational(1, 7), Rational(1, 9)}), true));
}

TEST_CASE("scaling the polyhedron") {
  NewtonPolyhedron np = newton_polyhedron(closure57());
  NewtonPolyhedron doubled = scale(np, 2);
  REQUIRE(doubled.facets().size() == 1);
  CHECK(doubled.facets()[0].normal == std::vector<Integer>{7, 5});
  CHECK(doubled.facets()[0].offset == 70);
  CHECK(scale(np, 1).facets() == np.facets());
  CHECK_THROWS_AS(scale(np, 0), std::invalid_argument);

  MonomialIdeal m(2, {{1, 0}, {0, 1}});
  CHECK(scale(newton_polyhedron(m), 3).facets() == newton_polyhedron(power(m, 3)).facets());
}

TEST_CASE("construction validates the facet data") {
  MonomialIdeal m(2, {{1, 0}, {0, 1}});
  Facet wrong;
  wrong.normal = {Integer(1), Integer(1)};
  wrong.offset = 2;  // cuts off both generators
  CHECK_THROWS_AS(NewtonPolyhedron(2, {wrong}, m.generators()), internal_error);

  Facet scaled;
  scaled.normal = {Integer(2), Integer(2)};  // not primitive
  scaled.offset = 2;
  CHECK_THROWS_AS(NewtonPolyhedron(2, {scaled}, m.generators()), internal_error);
}

TEST_CASE("scaled facets equal the power's facets on random ideals") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 30; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal ideal = random_ideal(rng, d, 5, 6);
    Int n = 1 + static_cast<Int>(rng() % 4);
    CHECK(scale(newton_polyhedron(ideal), n).facets() ==
          newton_polyhedron(power(ideal, n)).facets());
  }
}

TEST_CASE("np_member weak agrees with lp_member; strict implies weak") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 30; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal ideal = random_ideal(rng, d, 6, 8);
    NewtonPolyhedron np = newton_polyhedron(ideal);
    for (int t = 0; t < 150; ++t) {
      auto p = random_point(rng, d, 12, 6);
      bool weak = np_member(np, p, false);
      bool strict = np_member(np, p, true);
      CHECK(weak == lp_member(p, ideal.generators()));
      if (strict) CHECK(weak);
    }
  }
}

TEST_CASE("support values add up over products, facet by facet") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 30; ++iter) {
    int d = 2 + iter % 3;
    MonomialIdeal a = random_ideal(rng, d, 5, 7);
    MonomialIdeal b = random_ideal(rng, d, 5, 7);
    MonomialIdeal ab = product(a, b);
    auto support = [](const Facet& f, const MonomialIdeal& ideal) {
      Integer best = facet_eval(f, ideal.generators()[0]);
      for (const auto& g : ideal.generators()) best = std::min(best, facet_eval(f, g));
      return best;
    };
    NewtonPolyhedron np = newton_polyhedron(ab);
    for (const auto& f : np.facets())
      CHECK(support(f, ab) == support(f, a) + support(f, b));
  }
}
