#pragma once

#include <algorithm>
#include <vector>

#include "basis_family.hpp"
#include "monomial.hpp"
#include "unipoly.hpp"

namespace psns {

struct internal_limit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely generated monomial ideal, generators kept minimal.
struct MonomialIdeal {
  std::vector<Monomial> gens;

  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> g) : gens(minimalize(std::move(g))) {}

  bool is_zero() const { return gens.empty(); }
  bool contains_unit() const {
    return std::any_of(gens.begin(), gens.end(), [](const Monomial& m) { return m.is_unit(); });
  }
};

/// I : w, generated by m / gcd(m, w) over the generators of I.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  std::vector<Monomial> g;
  g.reserve(ideal.gens.size());
  for (const Monomial& m : ideal.gens) g.push_back(m / gcd(m, w));
  return MonomialIdeal(std::move(g));
}

namespace detail {

inline UniPoly bayer_stillman_impl(const MonomialIdeal& ideal, i64 depth) {
  if (depth > 512) throw internal_limit("Bayer-Stillman recursion too deep");
  if (ideal.is_zero()) return UniPoly::one();
  if (ideal.contains_unit()) return UniPoly::zero();
  // Pivot: generator of maximal total degree, first among ties.
  size_t pivot = 0;
  for (size_t k = 1; k < ideal.gens.size(); ++k)
    if (ideal.gens[k].degree() > ideal.gens[pivot].degree()) pivot = k;
  Monomial w = ideal.gens[pivot];
  std::vector<Monomial> rest;
  for (size_t k = 0; k < ideal.gens.size(); ++k)
    if (k != pivot) rest.push_back(ideal.gens[k]);
  MonomialIdeal j(std::move(rest));
  return bayer_stillman_impl(j, depth + 1) -
         UniPoly::tpow(w.degree()) * bayer_stillman_impl(colon(j, w), depth + 1);
}

} // namespace detail

/// Numerator of the Hilbert series of the quotient by a monomial ideal, by
/// the recursion P(<J, w>) = P(J) - t^{deg w} P(J : w). The result does not
/// depend on the pivot choice.
inline UniPoly bayer_stillman_P(const MonomialIdeal& ideal) {
  return detail::bayer_stillman_impl(ideal, 0);
}

/// Same value, but peeling the given pivots in order at the top level (colon
/// branches fall back to the default strategy). Regression hook for replaying
/// a fixed pivot sequence.
inline UniPoly bayer_stillman_P(const MonomialIdeal& ideal, const std::vector<Monomial>& pivots) {
  if (ideal.is_zero()) return UniPoly::one();
  if (ideal.contains_unit()) return UniPoly::zero();
  if (pivots.empty()) return bayer_stillman_P(ideal);
  Monomial w = pivots.front();
  std::vector<Monomial> remaining(pivots.begin() + 1, pivots.end());
  std::vector<Monomial> rest;
  for (const Monomial& m : ideal.gens)
    if (m != w) rest.push_back(m);
  MonomialIdeal j(std::move(rest));
  return bayer_stillman_P(j, remaining) - UniPoly::tpow(w.degree()) * bayer_stillman_P(colon(j, w));
}

} // namespace psns
