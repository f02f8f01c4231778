#pragma once

#include <vector>

#include "adjmono/ideal.hpp"
#include "adjmono/polyhedron.hpp"

namespace adjmono {

/// A monomial valuation, determined by its non-negative weights on the
/// coordinates: a monomial is valued at the weighted degree, an ideal at the
/// minimum over its generators. Normalized (value group Z) exactly when the
/// weights have gcd 1.
class MonomialValuation {
 public:
  explicit MonomialValuation(std::vector<Integer> weights);

  int dim() const { return static_cast<int>(weights_.size()); }
  const std::vector<Integer>& weights() const { return weights_; }
  bool normalized() const;

  friend bool operator==(const MonomialValuation&, const MonomialValuation&) = default;

 private:
  std::vector<Integer> weights_;
};

Integer value_of_monomial(const MonomialValuation& v, const Exponent& e);
Integer value_of_ideal(const MonomialValuation& v, const MonomialIdeal& ideal);

/// Value of the Jacobian ideal of the valuation ring over the base:
/// sum of the weights minus their gcd (gcd(a, 0) = a).
Integer jacobian_value(const MonomialValuation& v);

struct ReesValuation {
  MonomialValuation valuation;
  Integer value;  ///< v(I) = the facet offset
};

/// One normalized valuation per non-coordinate facet of the Newton
/// polyhedron: weights = facet normal, value = facet offset. These are the
/// Rees valuations of the ideal, in facet order. The unit ideal has none.
std::vector<ReesValuation> rees_valuations(const MonomialIdeal& ideal);

/// Certifies that dropping the valuation breaks the integral-closure
/// description of some power: w(e) < n*w(I) while v(e) >= n*v(I) for every
/// other Rees valuation v, so x^e lies in the relaxed intersection but not in
/// the closure of I^n.
struct NecessityWitness {
  MonomialValuation dropped_valuation;
  Int n = 0;
  Exponent e;
};

/// A witness per Rees valuation, found by LP on the facet system with the
/// denominators cleared. Every witness is re-verified by direct evaluation
/// before it is returned.
std::vector<NecessityWitness> check_rees_necessity(const MonomialIdeal& ideal);

}  // namespace adjmono
