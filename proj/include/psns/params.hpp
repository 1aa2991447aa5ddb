#pragma once

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace psns {

struct invalid_params : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The five integers defining a 4-generated pseudo-symmetric semigroup.
struct PseudoSymParams {
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a21 = 0;

  bool well_formed() const {
    return a1 > 1 && a2 > 1 && a3 > 1 && a4 > 1 && a21 > 0 && a21 < a1 - 1;
  }

  void require_well_formed() const {
    if (!well_formed())
      throw invalid_params("parameters must satisfy a_i > 1 and 0 < a21 < a1 - 1");
  }

  bool operator==(const PseudoSymParams&) const = default;
};

struct GeneratorTuple {
  i64 n1 = 0, n2 = 0, n3 = 0, n4 = 0;

  std::array<i64, 4> as_array() const { return {n1, n2, n3, n4}; }
  bool ordered() const { return n1 < n2 && n2 < n3 && n3 < n4; }
  i64 gcd() const { return std::gcd(std::gcd(n1, n2), std::gcd(n3, n4)); }

  bool operator==(const GeneratorTuple&) const = default;
};

/// The standard parametrization of the four semigroup generators.
inline GeneratorTuple derive_generators(const PseudoSymParams& p) {
  p.require_well_formed();
  GeneratorTuple g;
  // n1 = a2*a3*(a4-1) + 1
  g.n1 = checked_add(checked_mul(checked_mul(p.a2, p.a3), p.a4 - 1), 1);
  // n2 = a21*a3*a4 + (a1-a21-1)*(a3-1) + a3
  g.n2 = checked_add(
      checked_add(checked_mul(checked_mul(p.a21, p.a3), p.a4),
                  checked_mul(p.a1 - p.a21 - 1, p.a3 - 1)),
      p.a3);
  // n3 = a1*a4 + (a1-a21-1)*(a2-1)*(a4-1) - a4 + 1
  g.n3 = checked_add(
      checked_sub(checked_add(checked_mul(p.a1, p.a4),
                              checked_mul(checked_mul(p.a1 - p.a21 - 1, p.a2 - 1), p.a4 - 1)),
                  p.a4),
      1);
  // n4 = a1*a2*(a3-1) + a21*(a2-1) + a2
  g.n4 = checked_add(
      checked_add(checked_mul(checked_mul(p.a1, p.a2), p.a3 - 1),
                  checked_mul(p.a21, p.a2 - 1)),
      p.a2);
  return g;
}

struct ConditionReport {
  bool cond1 = false;   // a1 > a4
  bool cond2 = false;   // a3 < a1 - a21
  bool cond3 = false;   // a4 < a2 + a3 - 1
  bool cond4 = false;   // a2 > a21 + 1
  bool ordered = false; // n1 < n2 < n3 < n4
  // gcd(n1..n4) = 1. Reported as data, not gated on: the second worked
  // example itself has gcd 3 (801, 831, 5010, 8610), and every structural
  // result downstream depends only on the exponent arithmetic, which is
  // invariant under scaling the generators.
  bool coprime = false;

  bool all() const { return cond1 && cond2 && cond3 && cond4 && ordered; }

  std::string first_failing() const {
    if (!cond1) return "cond1 (a1 > a4)";
    if (!cond2) return "cond2 (a3 < a1 - a21)";
    if (!cond3) return "cond3 (a4 < a2 + a3 - 1)";
    if (!cond4) return "cond4 (a2 > a21 + 1)";
    if (!ordered) return "ordered (n1 < n2 < n3 < n4)";
    return "";
  }
};

inline ConditionReport check_conditions(const PseudoSymParams& p) {
  p.require_well_formed();
  ConditionReport r;
  r.cond1 = p.a1 > p.a4;
  r.cond2 = p.a3 < p.a1 - p.a21;
  r.cond3 = p.a4 < p.a2 + p.a3 - 1;
  r.cond4 = p.a2 > p.a21 + 1;
  GeneratorTuple g = derive_generators(p);
  r.ordered = g.ordered();
  r.coprime = g.gcd() == 1;
  return r;
}

} // namespace psns
