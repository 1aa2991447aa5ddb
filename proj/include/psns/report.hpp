#pragma once

#include <vector>

#include "closed_forms.hpp"
#include "monomial_ideal.hpp"
#include "mora.hpp"
#include "order_table.hpp"

namespace psns {

struct consistency_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HilbertReport {
  PseudoSymParams params;
  GeneratorTuple gens;
  SParameters s;
  UniPoly P, P1, P2, Q;
  std::vector<i64> H;       // partial sums of Q up to oracle depth
  i64 regularity_index = 0; // deg(Q) + 1
  i64 multiplicity = 0;     // Q(1) = n1
  bool nondecreasing = false;
  bool closed_form_agrees = false;
  bool oracle_agrees = false;
  std::vector<IdentityCheck> identities;

  bool identities_all() const {
    for (const auto& c : identities)
      if (!c.ok) return false;
    return true;
  }
};

/// Full pipeline for one parameter tuple: family, tangent cone, algorithmic
/// and closed-form series, semigroup oracle cross-check.
inline HilbertReport hilbert_report(const PseudoSymParams& p, i64 oracle_depth) {
  HilbertReport r;
  r.params = p;
  BasisFamily fam = build_family(p);
  r.gens = fam.gens;
  r.s = fam.s;

  TangentConeIdeal tc = leading_forms(fam);
  UniPoly algorithmic = bayer_stillman_P(MonomialIdeal(tc.gens));
  r.P = closed_form_P(p, fam.s);
  r.Q = closed_form_Q(p, fam.s);
  UniPoly q_div = divide_exact(r.P, 3);
  r.closed_form_agrees =
      algorithmic == r.P && q_div == r.Q && closed_form_Q_simplified(p, fam.s) == r.Q;
  if (algorithmic != r.P)
    throw consistency_failure("closed-form P disagrees with the Bayer-Stillman recursion");
  r.P1 = divide_exact(r.P, 1);
  r.P2 = divide_exact(r.P, 2);
  r.identities = appendix_identity_checks(p, fam.s);

  r.multiplicity = r.Q.eval_at_one();
  r.regularity_index = r.Q.degree() + 1;
  r.nondecreasing = true;
  for (i64 c : r.Q.c)
    if (c < 0) r.nondecreasing = false;

  // Hilbert function values are partial sums of the Q coefficients.
  r.H.clear();
  i64 run = 0;
  for (i64 n = 0; n <= oracle_depth; ++n) {
    run = checked_add(run, r.Q.coeff(n));
    r.H.push_back(run);
  }
  r.oracle_agrees = oracle_hilbert(r.gens, oracle_depth) == r.H;
  return r;
}

} // namespace psns
