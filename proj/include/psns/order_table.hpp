#pragma once

#include <span>
#include <vector>

#include "checked.hpp"
#include "params.hpp"

namespace psns {

/// Maximal factorization length of every semigroup element up to a bound.
/// ord[s] == -1 marks s outside the semigroup.
struct OrderTable {
  i64 bound = 0;
  std::vector<i64> ord;

  bool contains(i64 s) const { return s >= 0 && s <= bound && ord[static_cast<size_t>(s)] >= 0; }
  i64 at(i64 s) const { return ord[static_cast<size_t>(s)]; }
};

inline OrderTable compute_order_table(std::span<const i64> gens, i64 bound) {
  OrderTable t;
  t.bound = bound;
  t.ord.assign(static_cast<size_t>(bound) + 1, -1);
  t.ord[0] = 0;
  for (i64 s = 1; s <= bound; ++s) {
    i64 best = -1;
    for (i64 n : gens) {
      if (n <= s && t.ord[static_cast<size_t>(s - n)] >= 0)
        best = std::max(best, t.ord[static_cast<size_t>(s - n)] + 1);
    }
    t.ord[static_cast<size_t>(s)] = best;
  }
  return t;
}

inline OrderTable compute_order_table(const GeneratorTuple& g, i64 bound) {
  auto a = g.as_array();
  return compute_order_table(std::span<const i64>(a), bound);
}

/// Brute-force Hilbert function H(0..N): H(n) counts semigroup elements of
/// order exactly n. Every s with ord(s) <= N satisfies s <= N*max(gens).
inline std::vector<i64> oracle_hilbert(std::span<const i64> gens, i64 depth) {
  i64 nmax = 0;
  for (i64 n : gens) nmax = std::max(nmax, n);
  i64 bound = checked_mul(depth, nmax);
  OrderTable t = compute_order_table(gens, bound);
  std::vector<i64> h(static_cast<size_t>(depth) + 1, 0);
  for (i64 s = 0; s <= bound; ++s) {
    i64 o = t.at(s);
    if (o >= 0 && o <= depth) ++h[static_cast<size_t>(o)];
  }
  return h;
}

inline std::vector<i64> oracle_hilbert(const GeneratorTuple& g, i64 depth) {
  auto a = g.as_array();
  return oracle_hilbert(std::span<const i64>(a), depth);
}

} // namespace psns
