#pragma once

#include <vector>

#include "adjmono/numeric.hpp"

namespace adjmono {

/// A non-coordinate facet of conv(points) + the non-negative orthant, as the
/// halfspace normal.x >= offset. Invariants: entries of `normal` are >= 0
/// with gcd 1 and at least one positive; offset > 0; every generator
/// satisfies the inequality and at least one attains equality.
struct Facet {
  std::vector<Integer> normal;
  Integer offset;

  friend bool operator==(const Facet&, const Facet&) = default;
};

/// Lexicographic order on (normal, offset); distinct facets of one polyhedron
/// never share a normal, so this sorts facet lists canonically.
bool facet_less(const Facet& a, const Facet& b);

Integer facet_eval(const Facet& f, const Exponent& e);
Rational facet_eval(const Facet& f, const std::vector<Rational>& point);

/// The irredundant non-coordinate facets of conv(points) + Q_{>=0}^d,
/// gcd-normalized and sorted by facet_less. Coordinate facets (offset 0) are
/// omitted; the list is empty exactly when the zero vector is a point.
///
/// Runs the incremental double description method on the polar of the
/// homogenization cone, then discharges redundancy by LP.
std::vector<Facet> hull_facets(const std::vector<Exponent>& points, int dim);

/// Whether `point` lies in conv(points) + Q_{>=0}^d, i.e. point >= sum c_i a_i
/// for some c >= 0 with sum c_i = 1. Decided by exact LP feasibility.
bool lp_member(const std::vector<Rational>& point, const std::vector<Exponent>& points);

}  // namespace adjmono
