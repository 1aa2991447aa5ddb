#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "mora.hpp"
#include "params.hpp"

namespace psns {

struct monotonicity_violation : std::logic_error {
  using std::logic_error::logic_error;
};

struct leading_form_mismatch : std::logic_error {
  using std::logic_error::logic_error;
};

/// The sequence s_0..s_{a4-1}; s_{-1} is fixed to 0.
struct SParameters {
  std::vector<i64> s;

  i64 at(i64 j) const { return j < 0 ? 0 : s[static_cast<size_t>(j)]; }
  i64 last() const { return s.back(); }

  bool operator==(const SParameters&) const = default;
};

/// The defining inequality of the s_j parameters:
/// ((a4-1)s + j)a2 + a4 - j < s*a1 + ((a4-1)s + j + 1)*a21 + a3 - s.
inline bool s_inequality(const PseudoSymParams& p, i64 j, i64 s) {
  i64 m = checked_add(checked_mul(p.a4 - 1, s), j);
  i64 lhs = checked_add(checked_mul(m, p.a2), p.a4 - j);
  i64 rhs = checked_add(checked_add(checked_mul(s, p.a1), checked_mul(m + 1, p.a21)),
                        checked_sub(p.a3, s));
  return lhs < rhs;
}

/// Each s_j is the least s >= 0 satisfying s_inequality. The scan ascends
/// from s_{j-1}; a smaller solution below s_{j-1} would break the family's
/// index ranges and is reported instead of patched over.
inline SParameters compute_s(const PseudoSymParams& p) {
  SParameters sp;
  i64 prev = 0;
  for (i64 j = 0; j < p.a4; ++j) {
    i64 s = 0;
    while (!s_inequality(p, j, s)) {
      if (++s > 1'000'000)
        throw std::logic_error("s_j search diverged; parameters violate the ordering conditions");
    }
    if (s < prev)
      throw monotonicity_violation("s_" + std::to_string(j) + " = " + std::to_string(s) +
                                   " below s_" + std::to_string(j - 1) + " = " +
                                   std::to_string(prev));
    sp.s.push_back(s);
    prev = s;
  }
  return sp;
}

/// j*a2 + a4 < a1 + j*a21 + j for j = 0..a4-1; guarantees the stated leading
/// monomial of every f_{1,j}.
inline bool lemma_lmf1j_check(const PseudoSymParams& p) {
  for (i64 j = 0; j < p.a4; ++j) {
    i64 lhs = checked_add(checked_mul(j, p.a2), p.a4);
    i64 rhs = checked_add(checked_add(p.a1, checked_mul(j, p.a21)), j);
    if (!(lhs < rhs)) return false;
  }
  return true;
}

struct FamilyMember {
  enum class Kind { F1j, F2, F3, F4, G } kind;
  i64 j = -1; // index for F1j and G
  i64 i = -1; // second index for G
  Binomial b;

  std::string name() const {
    switch (kind) {
      case Kind::F1j: return "f_{1," + std::to_string(j) + "}";
      case Kind::F2: return "f_2";
      case Kind::F3: return "f_3";
      case Kind::F4: return "f_4";
      case Kind::G:
        return "g_{" + std::to_string(j) + "," + std::to_string(i) + "}";
    }
    return "?";
  }
};

struct BasisFamily {
  PseudoSymParams params;
  GeneratorTuple gens;
  SParameters s;
  std::vector<FamilyMember> members;

  std::vector<Binomial> binomials() const {
    std::vector<Binomial> v;
    v.reserve(members.size());
    for (const auto& m : members) v.push_back(m.b);
    return v;
  }

  /// 2*a4 + 3 + s_{a4-1}
  i64 expected_size() const {
    return checked_add(checked_add(checked_mul(2, params.a4), 3), s.last());
  }
};

inline Monomial mono(i64 e1, i64 e2, i64 e3, i64 e4) { return Monomial{{e1, e2, e3, e4}}; }

/// Materializes the standard-basis family: f_{1,j} for j = 0..a4-1, the toric
/// generators f_2, f_3, f_4, and g_{j,i} for i = s_{j-1}..s_j.
inline BasisFamily build_family(const PseudoSymParams& p) {
  BasisFamily fam;
  fam.params = p;
  fam.gens = derive_generators(p);
  fam.s = compute_s(p);

  auto push = [&](FamilyMember::Kind k, i64 j, i64 i, const Monomial& m1, const Monomial& m2) {
    fam.members.push_back({k, j, i, Binomial(m1, m2)});
  };

  for (i64 j = 0; j < p.a4; ++j) {
    // f_{1,j} = X1^{a1 + j*a21} - X2^{j*a2} X3 X4^{a4-(j+1)}
    push(FamilyMember::Kind::F1j, j, -1,
         mono(checked_add(p.a1, checked_mul(j, p.a21)), 0, 0, 0),
         mono(0, checked_mul(j, p.a2), 1, p.a4 - j - 1));
  }
  // f_2 = X2^{a2} - X1^{a21} X4
  push(FamilyMember::Kind::F2, -1, -1, mono(0, p.a2, 0, 0), mono(p.a21, 0, 0, 1));
  // f_3 = X3^{a3} - X1^{a1-a21-1} X2
  push(FamilyMember::Kind::F3, -1, -1, mono(0, 0, p.a3, 0), mono(p.a1 - p.a21 - 1, 1, 0, 0));
  // f_4 = X4^{a4} - X1 X2^{a2-1} X3^{a3-1}
  push(FamilyMember::Kind::F4, -1, -1, mono(0, 0, 0, p.a4), mono(1, p.a2 - 1, p.a3 - 1, 0));

  for (i64 j = 0; j < p.a4; ++j) {
    for (i64 i = fam.s.at(j - 1); i <= fam.s.at(j); ++i) {
      // g_{j,i} = X2^{((a4-1)i+j)a2+1} X4^{a4-(j+1)}
      //         - X1^{i*a1+((a4-1)i+j+1)a21+1} X3^{a3-(i+1)}
      i64 m = checked_add(checked_mul(p.a4 - 1, i), j);
      push(FamilyMember::Kind::G, j, i,
           mono(0, checked_add(checked_mul(m, p.a2), 1), 0, p.a4 - j - 1),
           mono(checked_add(checked_add(checked_mul(i, p.a1), checked_mul(m + 1, p.a21)), 1), 0,
                p.a3 - i - 1, 0));
    }
  }
  return fam;
}

/// Minimal monomial generating set of the tangent-cone ideal.
struct TangentConeIdeal {
  std::vector<Monomial> gens;
};

inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.e < b.e; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && gens[j].divides(gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

/// Expected leading form of a family member, straight from the closed
/// formulas (the g case splits on i < s_j versus i = s_j).
inline Monomial expected_leading_form(const PseudoSymParams& p, const SParameters& s,
                                      const FamilyMember& m) {
  switch (m.kind) {
    case FamilyMember::Kind::F1j:
      return mono(0, checked_mul(m.j, p.a2), 1, p.a4 - m.j - 1);
    case FamilyMember::Kind::F2:
      return mono(p.a21, 0, 0, 1);
    case FamilyMember::Kind::F3:
      return mono(0, 0, p.a3, 0);
    case FamilyMember::Kind::F4:
      return mono(0, 0, 0, p.a4);
    case FamilyMember::Kind::G: {
      i64 k = checked_add(checked_mul(p.a4 - 1, m.i), m.j);
      if (m.i < s.at(m.j))
        return mono(checked_add(checked_add(checked_mul(m.i, p.a1), checked_mul(k + 1, p.a21)), 1),
                    0, p.a3 - m.i - 1, 0);
      return mono(0, checked_add(checked_mul(k, p.a2), 1), 0, p.a4 - m.j - 1);
    }
  }
  throw std::logic_error("unreachable");
}

/// Leading monomials of the whole family: under the degree-compatible local
/// order these generate a monomial ideal with the same Hilbert function as
/// the tangent cone. Each must equal the closed formula, except that a
/// degree-tied (homogeneous) member may resolve its leading monomial to the
/// other side: any degree-compatible tie-break is a legitimate local order,
/// so the Hilbert function is unchanged either way (covered by tests). A
/// mismatch between inhomogeneous sides is still an error.
inline TangentConeIdeal leading_forms(const BasisFamily& fam) {
  std::vector<Monomial> gens;
  for (const FamilyMember& m : fam.members) {
    Monomial got = m.b.lead;
    Monomial want = expected_leading_form(fam.params, fam.s, m);
    if (got != want && got.degree() != m.b.tail.degree())
      throw leading_form_mismatch(m.name() + " leading form " + got.str() + " != " + want.str());
    gens.push_back(got);
  }
  return {minimalize(std::move(gens))};
}

/// The non-Cohen-Macaulayness criterion: X1 dividing a minimal generator of
/// the tangent cone refutes Cohen-Macaulayness in this setting.
inline bool is_tangent_cone_cm(const TangentConeIdeal& tc) {
  for (const Monomial& m : tc.gens)
    if (m.e[0] > 0) return false;
  return true;
}

} // namespace psns
