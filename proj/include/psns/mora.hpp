#pragma once

#include <optional>
#include <span>
#include <vector>

#include "binomial.hpp"

namespace psns {

/// Mora weak normal form. Reductors are drawn from T, which starts as G and
/// grows: when the selected reductor has larger ecart than the current
/// polynomial, the current polynomial joins T before the reduction step.
/// Reductor choice is minimal ecart, ties by position in T.
inline std::optional<Binomial> mora_nf(std::optional<Binomial> f,
                                       std::span<const Binomial> basis) {
  std::vector<Binomial> t(basis.begin(), basis.end());
  while (f) {
    size_t red = t.size();
    for (size_t k = 0; k < t.size(); ++k) {
      if (!t[k].lead.divides(f->lead)) continue;
      if (red == t.size() || t[k].ecart() < t[red].ecart()) red = k;
    }
    if (red == t.size()) break;
    if (t[red].ecart() > f->ecart()) t.push_back(*f);
    // One reduction step: f - (LM(f)/LM(red)) * red.
    Monomial q = f->lead / t[red].lead;
    f = make_binomial(q * t[red].tail, f->tail);
  }
  return f;
}

struct StandardBasisCheck {
  bool ok = true;
  size_t i = 0, j = 0;                 // witness pair indices when !ok
  std::optional<Binomial> remainder;   // its nonzero normal form
};

/// Buchberger/Mora criterion: all pairwise s-polynomials reduce to zero.
inline StandardBasisCheck is_standard_basis(std::span<const Binomial> basis) {
  StandardBasisCheck r;
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = i + 1; j < basis.size(); ++j) {
      std::optional<Binomial> s = spoly(basis[i], basis[j]);
      std::optional<Binomial> nf = mora_nf(s, basis);
      if (nf) {
        r.ok = false;
        r.i = i;
        r.j = j;
        r.remainder = nf;
        return r;
      }
    }
  }
  return r;
}

} // namespace psns
