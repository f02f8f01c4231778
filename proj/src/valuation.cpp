#include "adjmono/valuation.hpp"

#include <algorithm>

#include "adjmono/simplex.hpp"

namespace adjmono {

MonomialValuation::MonomialValuation(std::vector<Integer> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("monomial valuation: no weights");
  bool positive = false;
  for (const auto& w : weights_) {
    if (w < 0) throw std::invalid_argument("monomial valuation: negative weight");
    if (w > 0) positive = true;
  }
  if (!positive) throw std::invalid_argument("monomial valuation: weights all zero");
}

bool MonomialValuation::normalized() const {
  Integer g = 0;
  for (const auto& w : weights_) g = gcd(g, w);
  return g == 1;
}

Integer value_of_monomial(const MonomialValuation& v, const Exponent& e) {
  if (static_cast<int>(e.size()) != v.dim())
    throw std::invalid_argument("value_of_monomial: dimension mismatch");
  Integer s = 0;
  for (std::size_t j = 0; j < e.size(); ++j) s += v.weights()[j] * e[j];
  return s;
}

Integer value_of_ideal(const MonomialValuation& v, const MonomialIdeal& ideal) {
  if (ideal.dim() != v.dim())
    throw std::invalid_argument("value_of_ideal: dimension mismatch");
  Integer best = value_of_monomial(v, ideal.generators()[0]);
  for (std::size_t i = 1; i < ideal.generators().size(); ++i)
    best = std::min(best, value_of_monomial(v, ideal.generators()[i]));
  return best;
}

Integer jacobian_value(const MonomialValuation& v) {
  Integer sum = 0, g = 0;
  for (const auto& w : v.weights()) {
    sum += w;
    g = gcd(g, w);
  }
  return sum - g;
}

std::vector<ReesValuation> rees_valuations(const MonomialIdeal& ideal) {
  NewtonPolyhedron np = newton_polyhedron(ideal);
  std::vector<ReesValuation> out;
  out.reserve(np.facets().size());
  for (const auto& f : np.facets()) {
    MonomialValuation v(f.normal);
    if (!v.normalized())
      throw internal_error("rees_valuations: facet normal is not primitive");
    if (value_of_ideal(v, ideal) != f.offset)
      throw internal_error("rees_valuations: facet offset differs from the ideal's value");
    out.push_back({std::move(v), f.offset});
  }
  return out;
}

std::vector<NecessityWitness> check_rees_necessity(const MonomialIdeal& ideal) {
  NewtonPolyhedron np = newton_polyhedron(ideal);
  const auto& facets = np.facets();
  const std::size_t d = static_cast<std::size_t>(ideal.dim());

  std::vector<NecessityWitness> out;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    // a rational point on the unbounded side of every facet except the k-th,
    // with the violation of the k-th maximized
    std::vector<LinearConstraint> rows;
    for (std::size_t m = 0; m < facets.size(); ++m) {
      LinearConstraint row;
      for (const auto& h : facets[m].normal) row.coeffs.emplace_back(h);
      row.rhs = Rational(facets[m].offset);
      if (m == k) {
        row.rel = Relation::LessEq;
        row.strict = true;
      } else {
        row.rel = Relation::GreaterEq;
      }
      rows.push_back(std::move(row));
    }
    LpResult lp = simplex_feasible(d, std::move(rows), true);
    if (!lp.strictly_feasible)
      throw internal_error("check_rees_necessity: no separating point for an irredundant facet");

    Integer den = 1;
    for (const auto& q : lp.point) den = lcm(den, denominator(q));
    NecessityWitness w{MonomialValuation(facets[k].normal), to_int64(den, "witness power"),
                       Exponent(d)};
    for (std::size_t j = 0; j < d; ++j)
      w.e[j] = to_int64(numerator(lp.point[j]) * (den / denominator(lp.point[j])),
                        "witness exponent");

    for (std::size_t m = 0; m < facets.size(); ++m) {
      MonomialValuation v(facets[m].normal);
      Integer lhs = value_of_monomial(v, w.e);
      Integer rhs = Integer(w.n) * facets[m].offset;
      bool ok = m == k ? lhs < rhs : lhs >= rhs;
      if (!ok) throw internal_error("check_rees_necessity: witness fails direct evaluation");
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace adjmono
