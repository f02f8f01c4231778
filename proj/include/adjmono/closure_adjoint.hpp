#pragma once

#include <vector>

#include "adjmono/ideal.hpp"
#include "adjmono/polyhedron.hpp"

namespace adjmono {

/// Integral closure of I^n: the monomials whose exponents lie in n * NP(I).
/// Computed by enumerating a finite box of lattice points and keeping the
/// minimal members. `threads` only affects speed; the result is canonical.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, Int n, int threads = 1);

enum class AdjointMethod {
  Facets,      ///< strict facet test of e + (1,...,1) against n * NP(I)
  Valuations,  ///< weak test v(e) >= n*v(I) - jacobian value, per Rees valuation
  Bruteforce,  ///< recompute NP(I^n) from the power's generators; the oracle route
};

/// Adjoint (multiplier) ideal of I^n: the monomials x^e with e + (1,...,1) in
/// the interior of n * NP(I). The three methods are independent routes to the
/// same canonical generator list.
MonomialIdeal adjoint(const MonomialIdeal& ideal, Int n,
                      AdjointMethod method = AdjointMethod::Facets, int threads = 1);

/// One factorization a = factor_i + factor_j of an adjoint generator of a
/// product, with factor_i in adj(I) and factor_j in adj(J), derived from an
/// interior split b + c = a + (1,...,1) by f = ceil(b) - 1, g = floor(c).
struct SubadditivityWitness {
  Exponent generator;
  Exponent factor_i;
  Exponent factor_j;
  std::vector<Rational> interior_b;
  std::vector<Rational> interior_c;
};

struct SubadditivityResult {
  bool holds = false;
  std::vector<SubadditivityWitness> witnesses;
};

/// Verifies adj(IJ) <= adj(I) adj(J) and produces a witness factorization for
/// every minimal generator of adj(IJ). The containment always holds; a
/// failure is reported as internal_error, never as holds = false.
SubadditivityResult check_subadditivity(const MonomialIdeal& i_ideal,
                                        const MonomialIdeal& j_ideal);

/// Witness for a single generator; requires a + (1,...,1) interior to NP(IJ).
SubadditivityWitness split_adjoint_factor(const Exponent& a, const MonomialIdeal& i_ideal,
                                          const MonomialIdeal& j_ideal);

/// adj(I^n) <= integral closure of I^(n-l+1), where l is the number of
/// minimal generators. Requires n >= l.
bool briancon_skoda_check(const MonomialIdeal& ideal, Int n);

/// I and J are projectively equivalent when the closures of I^i and J^j agree
/// for some positive i, j; for monomial ideals, exactly when one Newton
/// polyhedron is a rational scaling of the other.
struct EquivalenceResult {
  bool equivalent = false;
  Int i = 0;  ///< with `j`, the coprime pair realizing closure(I^i) = closure(J^j)
  Int j = 0;
};

EquivalenceResult projective_equivalence(const MonomialIdeal& i_ideal,
                                         const MonomialIdeal& j_ideal);

}  // namespace adjmono
