#pragma once

#include <optional>
#include <variant>

#include "monomial.hpp"

namespace psns {

/// Oriented difference lead - tail with coefficients +1/-1, lead strictly
/// greater than tail in the local order. Zero is represented by
/// std::optional<Binomial> being empty wherever it can arise.
struct Binomial {
  Monomial lead;
  Monomial tail;

  Binomial(const Monomial& a, const Monomial& b) {
    assert(a != b);
    if (local_greater(a, b)) {
      lead = a;
      tail = b;
    } else {
      lead = b;
      tail = a;
    }
  }

  /// tail degree minus lead degree; nonnegative by orientation.
  i64 ecart() const { return tail.degree() - lead.degree(); }

  bool operator==(const Binomial&) const = default;

  std::string str() const { return lead.str() + " - " + tail.str(); }
};

/// Difference of two monomials as a binomial, or nullopt when they cancel.
inline std::optional<Binomial> make_binomial(const Monomial& a, const Monomial& b) {
  if (a == b) return std::nullopt;
  return Binomial(a, b);
}

/// S-polynomial. With unit coefficients the leading terms cancel exactly, so
/// the result is again a binomial (or zero); coefficients never escape +/-1.
inline std::optional<Binomial> spoly(const Binomial& f, const Binomial& g) {
  Monomial l = lcm(f.lead, g.lead);
  return make_binomial((l / g.lead) * g.tail, (l / f.lead) * f.tail);
}

/// Least homogeneous summand: the lead alone when it has strictly smaller
/// degree, the whole binomial when homogeneous.
inline std::variant<Monomial, Binomial> leading_form(const Binomial& f) {
  if (f.lead.degree() < f.tail.degree()) return f.lead;
  return f;
}

inline bool is_toric(const Binomial& f, const GeneratorTuple& g) {
  return s_degree(f.lead, g) == s_degree(f.tail, g);
}

} // namespace psns
