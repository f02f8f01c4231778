#include "adjmono/ideal.hpp"

#include <algorithm>

namespace adjmono {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int dim, std::vector<Exponent> generators) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("monomial ideal: dimension must be positive");
  if (generators.empty())
    throw std::invalid_argument("monomial ideal: at least one generator required");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dim)
      throw std::invalid_argument("monomial ideal: generator dimension mismatch");
    for (Int x : g)
      if (x < 0) throw std::invalid_argument("monomial ideal: negative exponent");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // a divisor precedes its multiples lexicographically, so one forward sweep
  // against the kept antichain suffices
  for (auto& g : generators) {
    bool dominated = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Exponent& kept) { return divides(kept, g); });
    if (!dominated) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return MonomialIdeal(dim, {Exponent(static_cast<std::size_t>(dim), 0)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(),
                                          [](Int x) { return x == 0; });
}

MonomialIdeal minimalize(const std::vector<Exponent>& exps) {
  if (exps.empty()) throw std::invalid_argument("minimalize: empty generating set");
  return MonomialIdeal(static_cast<int>(exps[0].size()), exps);
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("product: dimension mismatch");
  std::vector<Exponent> sums;
  sums.reserve(a.generators().size() * b.generators().size());
  for (const auto& ga : a.generators())
    for (const auto& gb : b.generators()) {
      Exponent s(ga.size());
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = checked_add(ga[j], gb[j]);
      sums.push_back(std::move(s));
    }
  return MonomialIdeal(a.dim(), std::move(sums));
}

MonomialIdeal power(const MonomialIdeal& a, Int n) {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  if (n == 0) return MonomialIdeal::unit(a.dim());
  MonomialIdeal result = a;
  for (Int k = 1; k < n; ++k) result = product(result, a);
  return result;
}

bool contains(const MonomialIdeal& ideal, const Exponent& e) {
  if (static_cast<int>(e.size()) != ideal.dim())
    throw std::invalid_argument("contains: dimension mismatch");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Exponent& g) { return divides(g, e); });
}

bool ideal_containment(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  if (inner.dim() != outer.dim())
    throw std::invalid_argument("ideal_containment: dimension mismatch");
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Exponent& g) { return contains(outer, g); });
}

}  // namespace adjmono
