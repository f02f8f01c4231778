#include "adjmono/polyhedron.hpp"

#include <algorithm>

namespace adjmono {

NewtonPolyhedron::NewtonPolyhedron(int dim, std::vector<Facet> facets,
                                   std::vector<Exponent> sources)
    : dim_(dim), facets_(std::move(facets)), sources_(std::move(sources)) {
  if (dim < 1) throw std::invalid_argument("newton polyhedron: dimension must be positive");
  if (sources_.empty()) throw std::invalid_argument("newton polyhedron: no source generators");
  if (!std::is_sorted(facets_.begin(), facets_.end(), facet_less))
    throw internal_error("newton polyhedron: facets not sorted");
  for (const auto& f : facets_) {
    if (static_cast<int>(f.normal.size()) != dim || f.offset <= 0)
      throw internal_error("newton polyhedron: malformed facet");
    Integer g = 0;
    for (const auto& h : f.normal) {
      if (h < 0) throw internal_error("newton polyhedron: negative facet normal entry");
      g = gcd(g, h);
    }
    if (g != 1) throw internal_error("newton polyhedron: facet normal not primitive");
    bool tight = false;
    for (const auto& s : sources_) {
      Integer v = facet_eval(f, s);
      if (v < f.offset) throw internal_error("newton polyhedron: generator violates a facet");
      if (v == f.offset) tight = true;
    }
    if (!tight) throw internal_error("newton polyhedron: facet not tight at any generator");
  }
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  return NewtonPolyhedron(ideal.dim(), hull_facets(ideal.generators(), ideal.dim()),
                          ideal.generators());
}

bool np_member(const NewtonPolyhedron& np, const std::vector<Rational>& point, bool strict) {
  if (static_cast<int>(point.size()) != np.dim())
    throw std::invalid_argument("np_member: dimension mismatch");
  for (const auto& x : point) {
    if (strict ? x <= 0 : x < 0) return false;
  }
  for (const auto& f : np.facets()) {
    Rational v = facet_eval(f, point);
    if (strict ? v <= Rational(f.offset) : v < Rational(f.offset)) return false;
  }
  return true;
}

NewtonPolyhedron scale(const NewtonPolyhedron& np, Int n) {
  if (n < 1) throw std::invalid_argument("scale: factor must be positive");
  std::vector<Facet> facets = np.facets();
  for (auto& f : facets) f.offset *= n;
  std::vector<Exponent> sources = np.source_generators();
  for (auto& s : sources)
    for (auto& x : s) x = checked_mul(x, n);
  return NewtonPolyhedron(np.dim(), std::move(facets), std::move(sources));
}

}  // namespace adjmono
