#include "adjmono/hull.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

#include "adjmono/simplex.hpp"

namespace adjmono {

bool facet_less(const Facet& a, const Facet& b) {
  if (a.normal != b.normal)
    return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(),
                                        b.normal.end());
  return a.offset < b.offset;
}

Integer facet_eval(const Facet& f, const Exponent& e) {
  Integer s = 0;
  for (std::size_t j = 0; j < f.normal.size(); ++j) s += f.normal[j] * e[j];
  return s;
}

Rational facet_eval(const Facet& f, const std::vector<Rational>& point) {
  Rational s = 0;
  for (std::size_t j = 0; j < f.normal.size(); ++j) s += Rational(f.normal[j]) * point[j];
  return s;
}

namespace {

using Bits = boost::dynamic_bitset<>;

// A ray of the polar cone in homogeneous coordinates (index 0 is the affine
// part), kept integral with gcd 1. `zero` records which processed constraint
// rows the ray is tight on; the combinatorial adjacency test reads it.
struct Ray {
  std::vector<Integer> v;
  Bits zero;
};

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

void divide_by_gcd(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

Bits tight_rows(const std::vector<std::vector<Integer>>& rows, std::size_t upto,
                const std::vector<Integer>& v) {
  Bits z(rows.size());
  for (std::size_t k = 0; k < upto; ++k)
    if (dot(rows[k], v) == 0) z.set(k);
  return z;
}

bool adjacent(const std::vector<Ray>& rays, std::size_t a, std::size_t b) {
  Bits common = rays[a].zero & rays[b].zero;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (r == a || r == b) continue;
    if (common.is_subset_of(rays[r].zero)) return false;
  }
  return true;
}

// Drops every halfspace implied by the remaining ones: a facet survives iff
// some point of the orthant violates it while satisfying the other survivors,
// found by slack-maximizing LP. With exact double description nothing is
// dropped, but this pass is the authoritative irredundancy guarantee.
std::vector<Facet> remove_redundant(std::vector<Facet> facets, int dim) {
  std::vector<bool> alive(facets.size(), true);
  for (std::size_t k = 0; k < facets.size(); ++k) {
    std::vector<LinearConstraint> rows;
    for (std::size_t m = 0; m < facets.size(); ++m) {
      if (m != k && !alive[m]) continue;
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
    alive[k] =
        simplex_feasible(static_cast<std::size_t>(dim), std::move(rows), true).strictly_feasible;
  }
  std::vector<Facet> kept;
  for (std::size_t k = 0; k < facets.size(); ++k)
    if (alive[k]) kept.push_back(std::move(facets[k]));
  return kept;
}

}  // namespace

std::vector<Facet> hull_facets(const std::vector<Exponent>& points, int dim) {
  if (points.empty()) throw std::invalid_argument("hull_facets: no points");
  if (dim < 1) throw std::invalid_argument("hull_facets: dimension must be positive");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("hull_facets: point dimension mismatch");
    for (Int x : p)
      if (x < 0) throw std::invalid_argument("hull_facets: negative coordinate");
  }

  const std::size_t d = static_cast<std::size_t>(dim);
  const std::size_t hdim = d + 1;

  // Facets of P = conv(points) + orthant are the extreme rays (c0, c) of the
  // polar cone {c : c0 + a.c >= 0 for every point a, c_j >= 0}; those with
  // c0 < 0 dehomogenize to c.x >= -c0, the rest are the coordinate facets and
  // the recession facet. The rows below are the polar cone's constraints.
  std::vector<std::vector<Integer>> rows;
  rows.reserve(points.size() + d);
  auto point_row = [&](const Exponent& p) {
    std::vector<Integer> r(hdim, Integer(0));
    r[0] = 1;
    for (std::size_t j = 0; j < d; ++j) r[j + 1] = p[j];
    return r;
  };
  rows.push_back(point_row(points[0]));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Integer> r(hdim, Integer(0));
    r[j + 1] = 1;
    rows.push_back(r);
  }
  for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(point_row(points[i]));

  // Initial double description pair: rows 0..d form a nonsingular system
  // whose inverse columns are the extreme rays of the cone they cut out.
  std::vector<Ray> rays;
  {
    std::vector<Integer> r0(hdim, Integer(0));
    r0[0] = 1;
    rays.push_back({r0, {}});
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Integer> r(hdim, Integer(0));
      r[0] = -Integer(points[0][j]);
      r[j + 1] = 1;
      divide_by_gcd(r);
      rays.push_back({std::move(r), {}});
    }
    for (auto& ray : rays) ray.zero = tight_rows(rows, d + 1, ray.v);
  }

  for (std::size_t k = d + 1; k < rows.size(); ++k) {
    std::vector<Integer> vals(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(rows[k], rays[r].v);
      if (vals[r] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (vals[r] == 0) rays[r].zero.set(k);
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] < 0) continue;
      Ray kept = rays[r];
      if (vals[r] == 0) kept.zero.set(k);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (vals[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (vals[n] >= 0) continue;
        if (!adjacent(rays, p, n)) continue;
        std::vector<Integer> w(hdim);
        for (std::size_t j = 0; j < hdim; ++j)
          w[j] = vals[p] * rays[n].v[j] - vals[n] * rays[p].v[j];
        divide_by_gcd(w);
        Bits z = tight_rows(rows, k + 1, w);
        next.push_back({std::move(w), std::move(z)});
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  for (const auto& ray : rays) {
    if (ray.v[0] >= 0) continue;  // coordinate or recession facet
    Facet f;
    f.normal.assign(ray.v.begin() + 1, ray.v.end());
    f.offset = -ray.v[0];
    facets.push_back(std::move(f));
  }

  std::sort(facets.begin(), facets.end(), facet_less);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  facets = remove_redundant(std::move(facets), dim);

  for (const auto& f : facets) {
    Integer g = 0;
    bool tight = false;
    for (const auto& h : f.normal) {
      if (h < 0) throw internal_error("hull_facets: negative facet normal entry");
      g = gcd(g, h);
    }
    for (const auto& p : points) {
      Integer v = facet_eval(f, p);
      if (v < f.offset) throw internal_error("hull_facets: facet cuts off a generator");
      if (v == f.offset) tight = true;
    }
    if (!tight) throw internal_error("hull_facets: facet not supported by a generator");
    if (g != 1) throw internal_error("hull_facets: facet normal not primitive");
  }

  bool has_origin = std::any_of(points.begin(), points.end(), [](const Exponent& p) {
    return std::all_of(p.begin(), p.end(), [](Int x) { return x == 0; });
  });
  if (has_origin != facets.empty())
    throw internal_error("hull_facets: facet list inconsistent with unit ideal test");
  return facets;
}

bool lp_member(const std::vector<Rational>& point, const std::vector<Exponent>& points) {
  if (points.empty()) throw std::invalid_argument("lp_member: no points");
  const std::size_t d = point.size();
  for (const auto& p : points)
    if (p.size() != d) throw std::invalid_argument("lp_member: point dimension mismatch");

  const std::size_t s = points.size();
  std::vector<LinearConstraint> rows;
  LinearConstraint sum_one;
  sum_one.coeffs.assign(s, Rational(1));
  sum_one.rel = Relation::Equal;
  sum_one.rhs = 1;
  rows.push_back(std::move(sum_one));
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint row;
    row.coeffs.reserve(s);
    for (std::size_t i = 0; i < s; ++i) row.coeffs.emplace_back(points[i][j]);
    row.rel = Relation::LessEq;
    row.rhs = point[j];
    rows.push_back(std::move(row));
  }
  return simplex_feasible(s, std::move(rows), false).feasible;
}

}  // namespace adjmono
