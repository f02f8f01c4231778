#pragma once

#include <vector>

#include "adjmono/numeric.hpp"

namespace adjmono {

/// An ideal generated by monomials, held in canonical form: the generators
/// are the componentwise-minimal antichain (no generator divides another),
/// sorted lexicographically. The zero ideal is unrepresentable; the unit
/// ideal is generated by the zero exponent alone.
class MonomialIdeal {
 public:
  /// Minimalizes and sorts the given generating set.
  MonomialIdeal(int dim, std::vector<Exponent> generators);

  static MonomialIdeal unit(int dim);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool is_unit() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int dim_;
  std::vector<Exponent> gens_;
};

/// Canonical form of an arbitrary generating set; the dimension is taken from
/// the exponents themselves.
MonomialIdeal minimalize(const std::vector<Exponent>& exps);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^n; n = 0 yields the unit ideal by convention.
MonomialIdeal power(const MonomialIdeal& a, Int n);

/// Whether x^e lies in the ideal, i.e. some generator divides e.
bool contains(const MonomialIdeal& ideal, const Exponent& e);

/// Whether every generator of `inner` lies in `outer`.
bool ideal_containment(const MonomialIdeal& inner, const MonomialIdeal& outer);

}  // namespace adjmono
