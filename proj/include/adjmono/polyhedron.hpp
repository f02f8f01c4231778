#pragma once

#include <vector>

#include "adjmono/hull.hpp"
#include "adjmono/ideal.hpp"

namespace adjmono {

/// H-representation of the Newton polyhedron of a monomial ideal:
/// conv(generators) + the non-negative orthant. Only the non-coordinate
/// facets are stored; the orthant constraints are implicit. The unit ideal's
/// polyhedron is the whole orthant and has no facets.
class NewtonPolyhedron {
 public:
  NewtonPolyhedron(int dim, std::vector<Facet> facets, std::vector<Exponent> sources);

  int dim() const { return dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Exponent>& source_generators() const { return sources_; }

 private:
  int dim_;
  std::vector<Facet> facets_;
  std::vector<Exponent> sources_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// Weak mode: every facet inequality holds and the point is >= 0.
/// Strict mode: every facet inequality holds strictly AND every coordinate is
/// strictly positive — the topological interior, since the polyhedron lives
/// inside the orthant.
bool np_member(const NewtonPolyhedron& np, const std::vector<Rational>& point, bool strict);

/// n * NP: same facet normals, offsets multiplied by n. Coincides with the
/// Newton polyhedron of the n-th power of the source ideal.
NewtonPolyhedron scale(const NewtonPolyhedron& np, Int n);

}  // namespace adjmono
