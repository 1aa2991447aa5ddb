#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <span>
#include <string>

#include "checked.hpp"
#include "params.hpp"

namespace psns {

/// Monomial in X1..X4, exponents are nonnegative 64-bit integers.
struct Monomial {
  std::array<i64, 4> e{0, 0, 0, 0};

  static Monomial unit() { return {}; }

  i64 degree() const { return checked_add(checked_add(e[0], e[1]), checked_add(e[2], e[3])); }

  bool is_unit() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < 4; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) r.e[i] = checked_add(e[i], m.e[i]);
    return r;
  }

  /// Exact division; caller guarantees m divides *this.
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) {
      assert(e[i] >= m.e[i]);
      r.e[i] = e[i] - m.e[i];
    }
    return r;
  }

  bool operator==(const Monomial&) const = default;

  std::string str() const {
    if (is_unit()) return "1";
    std::string s;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "X" + std::to_string(i + 1);
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < 4; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

/// Local order (negative degree reverse lexicographic, X1 > X2 > X3 > X4):
/// lower total degree is greater; equal degrees tie-break by reverse lex,
/// scanning X4 down to X1, smaller exponent at the first difference wins.
/// The unit monomial is the maximum element.
inline std::strong_ordering local_compare(const Monomial& a, const Monomial& b) {
  i64 da = a.degree(), db = b.degree();
  if (da != db) return da < db ? std::strong_ordering::greater : std::strong_ordering::less;
  for (int i = 3; i >= 0; --i) {
    if (a.e[i] != b.e[i])
      return a.e[i] < b.e[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

inline bool local_greater(const Monomial& a, const Monomial& b) {
  return local_compare(a, b) == std::strong_ordering::greater;
}

/// Semigroup degree of a monomial under X_i -> t^{n_i}.
inline i64 s_degree(const Monomial& m, const GeneratorTuple& g) {
  auto n = g.as_array();
  i64 d = 0;
  for (int i = 0; i < 4; ++i) d = checked_add(d, checked_mul(m.e[i], n[i]));
  return d;
}

} // namespace psns
