#include "adjmono/closure_adjoint.hpp"

#include <algorithm>
#include <thread>

#include "adjmono/simplex.hpp"
#include "adjmono/valuation.hpp"

namespace adjmono {

namespace {

// Integer threshold system: e is a member iff normal.e >= threshold for every
// row. The weak facet test, the strict (shifted) facet test, and the
// valuation-threshold test all take this shape over the integers.
struct ThresholdSystem {
  std::vector<std::vector<Integer>> normals;
  std::vector<Integer> thresholds;
};

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

// Scans the box [0, bound] column by column: for a fixed prefix the member
// set along the last coordinate is an upward ray, so its foot is the only
// candidate for a minimal member and is found by a ceiling division per row.
// Candidates arrive in lex order; anything above an already-found member is
// dropped, which leaves exactly the componentwise-minimal members.
template <typename Num>
void scan_columns(const std::vector<std::vector<Num>>& normals,
                  const std::vector<Num>& thresholds, const std::vector<Int>& bound,
                  Int first_lo, Int first_hi, std::vector<Exponent>& found) {
  const std::size_t d = bound.size();
  const std::size_t last = d - 1;
  Exponent e(d, 0);
  e[0] = first_lo;
  for (;;) {
    Int foot = 0;
    bool feasible = true;
    for (std::size_t r = 0; r < normals.size(); ++r) {
      Num dot = 0;
      for (std::size_t j = 0; j < last; ++j) dot += normals[r][j] * e[j];
      Num rem = thresholds[r] - dot;
      if (rem <= 0) continue;
      const Num& h = normals[r][last];
      Num t = h == 0 ? Num(0) : (rem + h - 1) / h;
      if (h == 0 || t > bound[last]) {
        feasible = false;
        break;
      }
      foot = std::max(foot, static_cast<Int>(t));
    }
    if (feasible) {
      e[last] = foot;
      bool dominated = std::any_of(found.begin(), found.end(),
                                   [&](const Exponent& f) { return divides(f, e); });
      if (!dominated) found.push_back(e);
      e[last] = 0;
    }
    // odometer over the prefix coordinates
    if (d == 1) return;
    std::size_t j = last;
    while (j > 0) {
      --j;
      Int hi = j == 0 ? first_hi : bound[j];
      if (e[j] < hi) {
        ++e[j];
        break;
      }
      e[j] = 0;
      if (j == 0) return;
    }
  }
}

MonomialIdeal minimal_members(int dim, const std::vector<Int>& bound, ThresholdSystem sys,
                              int threads) {
  // Use a native-width scan whenever every dot product over the box provably
  // fits; the arbitrary-precision fallback keeps outsized inputs correct.
  bool fits = true;
  const Integer limit = std::numeric_limits<Int>::max();
  for (std::size_t r = 0; r < sys.normals.size() && fits; ++r) {
    Integer worst = 1;  // headroom for the ceiling division
    for (std::size_t j = 0; j < bound.size(); ++j)
      worst += sys.normals[r][j] * (bound[j] + 1);
    if (worst > limit || sys.thresholds[r] + worst > limit ||
        sys.thresholds[r] - worst < -limit)
      fits = false;
  }

  auto run = [&](auto&& scan) {
    std::vector<Exponent> found;
    if (threads <= 1 || dim == 1 || bound[0] == 0) {
      scan(0, bound[0], found);
    } else {
      Int slices = std::min<Int>(threads, bound[0] + 1);
      std::vector<std::vector<Exponent>> parts(static_cast<std::size_t>(slices));
      std::vector<std::thread> pool;
      for (Int s = 0; s < slices; ++s) {
        Int lo = s * (bound[0] + 1) / slices;
        Int hi = (s + 1) * (bound[0] + 1) / slices - 1;
        pool.emplace_back(
            [&, lo, hi, s] { scan(lo, hi, parts[static_cast<std::size_t>(s)]); });
      }
      for (auto& t : pool) t.join();
      for (auto& p : parts) found.insert(found.end(), p.begin(), p.end());
    }
    return MonomialIdeal(dim, std::move(found));
  };

  if (!fits) {
    return run([&](Int lo, Int hi, std::vector<Exponent>& found) {
      scan_columns<Integer>(sys.normals, sys.thresholds, bound, lo, hi, found);
    });
  }
  std::vector<std::vector<Int>> normals(sys.normals.size());
  std::vector<Int> thresholds(sys.normals.size());
  for (std::size_t r = 0; r < sys.normals.size(); ++r) {
    for (const auto& h : sys.normals[r]) normals[r].push_back(to_int64(h));
    thresholds[r] = to_int64(sys.thresholds[r]);
  }
  return run([&](Int lo, Int hi, std::vector<Exponent>& found) {
    scan_columns<Int>(normals, thresholds, bound, lo, hi, found);
  });
}

// A componentwise-minimal member of the scaled polyhedron never needs
// e_j past n * max_i a_ij: beyond that, lowering e_j by one preserves the
// certifying convex combination, so the point was not minimal.
std::vector<Int> box_bound(const MonomialIdeal& ideal, Int n) {
  std::vector<Int> bound(static_cast<std::size_t>(ideal.dim()), 0);
  for (const auto& g : ideal.generators())
    for (std::size_t j = 0; j < bound.size(); ++j) bound[j] = std::max(bound[j], g[j]);
  for (auto& b : bound) b = checked_mul(b, n);
  return bound;
}

// Strict facet test of the shifted point, over the integers:
// normal.(e + 1) > offset  <=>  normal.e >= offset - sum(normal) + 1.
ThresholdSystem strict_shift_system(const NewtonPolyhedron& np) {
  ThresholdSystem sys;
  for (const auto& f : np.facets()) {
    Integer row_sum = 0;
    for (const auto& h : f.normal) row_sum += h;
    sys.normals.push_back(f.normal);
    sys.thresholds.push_back(f.offset - row_sum + 1);
  }
  return sys;
}

}  // namespace

MonomialIdeal integral_closure(const MonomialIdeal& ideal, Int n, int threads) {
  if (n < 1) throw std::invalid_argument("integral_closure: power must be >= 1");
  NewtonPolyhedron np = scale(newton_polyhedron(ideal), n);
  ThresholdSystem sys;
  for (const auto& f : np.facets()) {
    sys.normals.push_back(f.normal);
    sys.thresholds.push_back(f.offset);
  }
  return minimal_members(ideal.dim(), box_bound(ideal, n), std::move(sys), threads);
}

MonomialIdeal adjoint(const MonomialIdeal& ideal, Int n, AdjointMethod method, int threads) {
  if (n < 1) throw std::invalid_argument("adjoint: power must be >= 1");
  ThresholdSystem sys;
  switch (method) {
    case AdjointMethod::Facets:
      sys = strict_shift_system(scale(newton_polyhedron(ideal), n));
      break;
    case AdjointMethod::Valuations:
      for (const auto& rv : rees_valuations(ideal)) {
        sys.normals.push_back(rv.valuation.weights());
        sys.thresholds.push_back(Integer(n) * rv.value - jacobian_value(rv.valuation));
      }
      break;
    case AdjointMethod::Bruteforce:
      sys = strict_shift_system(newton_polyhedron(power(ideal, n)));
      break;
  }
  return minimal_members(ideal.dim(), box_bound(ideal, n), std::move(sys), threads);
}

namespace {

std::vector<Rational> shifted_point(const Exponent& a) {
  std::vector<Rational> t;
  t.reserve(a.size());
  for (Int x : a) t.emplace_back(checked_add(x, 1));
  return t;
}

SubadditivityWitness split_against(const Exponent& a, const NewtonPolyhedron& np_i,
                                   const NewtonPolyhedron& np_j,
                                   const NewtonPolyhedron& np_ij) {
  const std::size_t d = a.size();
  std::vector<Rational> target = shifted_point(a);
  if (!np_member(np_ij, target, /*strict=*/true))
    throw std::invalid_argument(
        "split_adjoint_factor: exponent is not an adjoint generator of the product");

  // Interior Minkowski split: b interior to NP(I), target - b interior to
  // NP(J), every inequality strict through a shared maximized slack.
  std::vector<LinearConstraint> rows;
  for (const auto& f : np_i.facets()) {
    LinearConstraint row;
    for (const auto& h : f.normal) row.coeffs.emplace_back(h);
    row.rel = Relation::GreaterEq;
    row.rhs = Rational(f.offset);
    row.strict = true;
    rows.push_back(std::move(row));
  }
  for (const auto& f : np_j.facets()) {
    LinearConstraint row;
    Rational rhs = -Rational(f.offset);
    for (std::size_t j = 0; j < d; ++j) {
      row.coeffs.emplace_back(f.normal[j]);
      rhs += Rational(f.normal[j]) * target[j];
    }
    row.rel = Relation::LessEq;
    row.rhs = rhs;
    row.strict = true;
    rows.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < d; ++j) {
    LinearConstraint lower;
    lower.coeffs.assign(d, Rational(0));
    lower.coeffs[j] = 1;
    lower.rel = Relation::GreaterEq;
    lower.rhs = 0;
    lower.strict = true;
    rows.push_back(std::move(lower));
    LinearConstraint upper;
    upper.coeffs.assign(d, Rational(0));
    upper.coeffs[j] = 1;
    upper.rel = Relation::LessEq;
    upper.rhs = target[j];
    upper.strict = true;
    rows.push_back(std::move(upper));
  }
  LpResult lp = simplex_feasible(d, std::move(rows), true);
  if (!lp.strictly_feasible)
    throw internal_error("split_adjoint_factor: interior Minkowski split not found");

  SubadditivityWitness w;
  w.generator = a;
  w.interior_b = lp.point;
  w.interior_c.reserve(d);
  for (std::size_t j = 0; j < d; ++j) w.interior_c.push_back(target[j] - lp.point[j]);
  w.factor_i.resize(d);
  w.factor_j.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    w.factor_i[j] = to_int64(ceil_rational(w.interior_b[j]) - 1, "split factor");
    w.factor_j[j] = to_int64(floor_rational(w.interior_c[j]), "split factor");
  }

  for (std::size_t j = 0; j < d; ++j) {
    if (w.factor_i[j] < 0 || w.factor_j[j] < 0 ||
        checked_add(w.factor_i[j], w.factor_j[j]) != a[j])
      throw internal_error("split_adjoint_factor: rounded factors do not recompose");
  }
  if (!np_member(np_i, shifted_point(w.factor_i), true) ||
      !np_member(np_j, shifted_point(w.factor_j), true))
    throw internal_error("split_adjoint_factor: a factor is not an adjoint member");
  return w;
}

}  // namespace

SubadditivityWitness split_adjoint_factor(const Exponent& a, const MonomialIdeal& i_ideal,
                                          const MonomialIdeal& j_ideal) {
  if (i_ideal.dim() != j_ideal.dim() || a.size() != static_cast<std::size_t>(i_ideal.dim()))
    throw std::invalid_argument("split_adjoint_factor: dimension mismatch");
  return split_against(a, newton_polyhedron(i_ideal), newton_polyhedron(j_ideal),
                       newton_polyhedron(product(i_ideal, j_ideal)));
}

SubadditivityResult check_subadditivity(const MonomialIdeal& i_ideal,
                                        const MonomialIdeal& j_ideal) {
  if (i_ideal.dim() != j_ideal.dim())
    throw std::invalid_argument("check_subadditivity: dimension mismatch");

  MonomialIdeal prod = product(i_ideal, j_ideal);
  MonomialIdeal adj_prod = adjoint(prod, 1);
  MonomialIdeal adj_i = adjoint(i_ideal, 1);
  MonomialIdeal adj_j = adjoint(j_ideal, 1);
  if (!ideal_containment(adj_prod, product(adj_i, adj_j)))
    throw internal_error("check_subadditivity: containment adj(IJ) <= adj(I)adj(J) failed");

  NewtonPolyhedron np_i = newton_polyhedron(i_ideal);
  NewtonPolyhedron np_j = newton_polyhedron(j_ideal);
  NewtonPolyhedron np_ij = newton_polyhedron(prod);
  SubadditivityResult res;
  res.holds = true;
  for (const auto& gen : adj_prod.generators()) {
    SubadditivityWitness w = split_against(gen, np_i, np_j, np_ij);
    if (!contains(adj_i, w.factor_i) || !contains(adj_j, w.factor_j))
      throw internal_error("check_subadditivity: witness factor outside the adjoint");
    res.witnesses.push_back(std::move(w));
  }
  return res;
}

bool briancon_skoda_check(const MonomialIdeal& ideal, Int n) {
  Int l = static_cast<Int>(ideal.generators().size());
  if (n < l)
    throw std::invalid_argument("briancon_skoda_check: power below the generator count");
  return ideal_containment(adjoint(ideal, n), integral_closure(ideal, n - l + 1));
}

EquivalenceResult projective_equivalence(const MonomialIdeal& i_ideal,
                                         const MonomialIdeal& j_ideal) {
  if (i_ideal.dim() != j_ideal.dim())
    throw std::invalid_argument("projective_equivalence: dimension mismatch");

  const auto fi = newton_polyhedron(i_ideal).facets();
  const auto fj = newton_polyhedron(j_ideal).facets();
  if (fi.size() != fj.size()) return {};
  if (fi.empty()) return {true, 1, 1};  // both unit ideals

  // Equivalent iff the polyhedra share their facet normals and all offsets
  // are in one rational ratio; then i*NP(I) = j*NP(J) pins the closures of
  // the matching powers to each other.
  Rational ratio(fi[0].offset, fj[0].offset);
  for (std::size_t k = 0; k < fi.size(); ++k) {
    if (fi[k].normal != fj[k].normal) return {};
    if (Rational(fi[k].offset, fj[k].offset) != ratio) return {};
  }
  return {true, to_int64(denominator(ratio), "equivalence exponent"),
          to_int64(numerator(ratio), "equivalence exponent")};
}

}  // namespace adjmono
