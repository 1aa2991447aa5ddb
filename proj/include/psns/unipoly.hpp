#pragma once

#include <cassert>
#include <string>
#include <vector>

#include "checked.hpp"

namespace psns {

struct not_divisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense integer polynomial in t, canonical form (no trailing zeros).
struct UniPoly {
  std::vector<i64> c;

  UniPoly() = default;
  explicit UniPoly(std::vector<i64> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  i64 degree() const { return c.empty() ? -1 : static_cast<i64>(c.size()) - 1; }
  i64 coeff(i64 k) const {
    return (k < 0 || k >= static_cast<i64>(c.size())) ? 0 : c[static_cast<size_t>(k)];
  }

  static UniPoly zero() { return {}; }
  static UniPoly one() { return UniPoly({1}); }

  /// t^k
  static UniPoly tpow(i64 k) {
    assert(k >= 0);
    std::vector<i64> v(static_cast<size_t>(k) + 1, 0);
    v.back() = 1;
    return UniPoly(std::move(v));
  }

  /// 1 + t + ... + t^upper; zero when upper < 0 (empty-sum convention).
  static UniPoly geom(i64 upper) {
    if (upper < 0) return zero();
    return UniPoly(std::vector<i64>(static_cast<size_t>(upper) + 1, 1));
  }

  /// 1 - t^k
  static UniPoly one_minus_tpow(i64 k) { return one() - tpow(k); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<i64> v(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = checked_add(i < c.size() ? c[i] : 0, i < o.c.size() ? o.c[i] : 0);
    return UniPoly(std::move(v));
  }

  UniPoly operator-(const UniPoly& o) const {
    std::vector<i64> v(std::max(c.size(), o.c.size()), 0);
    for (size_t i = 0; i < v.size(); ++i)
      v[i] = checked_sub(i < c.size() ? c[i] : 0, i < o.c.size() ? o.c[i] : 0);
    return UniPoly(std::move(v));
  }

  UniPoly operator-() const { return zero() - *this; }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    std::vector<i64> v(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        v[i + j] = checked_add(v[i + j], checked_mul(c[i], o.c[j]));
    }
    return UniPoly(std::move(v));
  }

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }

  i64 eval_at_one() const {
    i64 s = 0;
    for (i64 x : c) s = checked_add(s, x);
    return s;
  }

  bool operator==(const UniPoly&) const = default;

  /// Signed-term rendering, e.g. "1 - 3t^4 + 3t^5".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      i64 a = c[k];
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += a < 0 ? " - " : " + ";
      }
      i64 m = a < 0 ? -a : a;
      if (m != 1 || k == 0) out += std::to_string(m);
      if (k >= 1) out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out;
  }
};

/// Exact quotient by (1-t)^k; throws not_divisible with the failing step if a
/// synthetic division leaves a remainder.
inline UniPoly divide_exact(UniPoly f, i64 k) {
  for (i64 step = 0; step < k; ++step) {
    if (f.is_zero()) continue;
    // Divide by (1 - t): with q(t) = f(t)/(1-t), q_i = sum_{j<=i} f_j and the
    // remainder is f(1).
    std::vector<i64> q(f.c.size() - 1, 0);
    i64 run = f.c.empty() ? 0 : f.c[0];
    for (size_t i = 0; i + 1 < f.c.size(); ++i) {
      q[i] = run;
      run = checked_add(run, f.c[i + 1]);
    }
    if (run != 0)
      throw not_divisible("remainder " + std::to_string(run) + " at division step " +
                          std::to_string(step + 1));
    f = UniPoly(std::move(q));
  }
  return f;
}

} // namespace psns
