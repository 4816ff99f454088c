#pragma once

#include <optional>
#include <utility>

#include "jets/exactmath.hpp"

namespace jets {

/// Fano: the polarization in the jet bounds is -K_X itself.
/// TrivialK: K_X = O_X with an arbitrary ample L.
/// General: only the upper bound holds.
enum class CanonicalClass { Fano, TrivialK, General };

/// Admissible range [s_lo, s_hi] for s(kL, x) at a fixed k.
/// Both endpoints are clamped below at -1 (s = -1 means x is a base point).
struct JetInterval {
  Integer k;
  Integer s_lo;
  Integer s_hi;

  friend bool operator==(const JetInterval&, const JetInterval&) = default;
};

/// A curve computing eps = L_dot_C / m, singular at x (m >= 2).
struct SingularCurveData {
  Integer L_dot_C;
  Integer m;
};

/// Upper bounds on the anticanonical Seshadri constant of a Fano variety:
/// the corollary bound (n or n+1) and the universal degree bound
/// eps <= root_bound.first ^ (1/root_bound.second).
struct SeshadriCap {
  Integer corollary_bound;
  std::pair<Integer, Integer> root_bound;  // (M, n): eps <= M^(1/n)
  bool root_is_integer;
};

struct IndexTheoremVerdict {
  bool hodge_ok;
  bool smooth_case_C2_le_1;
  // present only when eps^2 < L^2 holds exactly
  std::optional<bool> strict_case_C2_le_0;
};

enum class BsVerdict { NoConclusion, MustBeProjectiveSpace };

enum class PnVerdict { IsProjectiveSpace, BoundViolated, NoConclusion };

inline Integer clamp_jet(Integer s) { return s < -1 ? Integer(-1) : s; }

/// max(-1, floor(k*eps)); valid for every smooth projective variety.
inline Integer upper_jet_bound(const Integer& k, const Rational& eps) {
  return clamp_jet(floor_scale(k, eps));
}

/// Lower bound for s(k(-K_X), x) on a Fano n-fold with (-K_X)^n = Kn.
/// First branch: max(-1, floor((k+1) eps) - n).  When eps equals the
/// integer n-th root of Kn: max(-1, (k+1) eps - (n+1)).
inline Integer fano_lower_bound(const Integer& k, const Rational& eps,
                                const Integer& n, const Integer& Kn) {
  const RootOrdering ord = cmp_to_nth_root(eps, Kn, n);
  if (ord == RootOrdering::Above)
    throw invalid_input("fano_lower_bound: eps exceeds the degree bound");
  if (ord == RootOrdering::Below || !perfect_nth_root(Kn, n))
    return clamp_jet(floor_scale(k + 1, eps) - n);
  // eps is the integer root itself
  return clamp_jet((k + 1) * eps.num() - (n + 1));
}

/// Lower bound for s(kL, x) when K_X = O_X and L^n = Ln.
/// First branch: max(-1, floor(k eps) - n); alternative: max(-1, k e - (n+1)).
inline Integer trivialK_lower_bound(const Integer& k, const Rational& eps,
                                    const Integer& n, const Integer& Ln) {
  const RootOrdering ord = cmp_to_nth_root(eps, Ln, n);
  if (ord == RootOrdering::Above)
    throw invalid_input("trivialK_lower_bound: eps exceeds the degree bound");
  if (ord == RootOrdering::Below || !perfect_nth_root(Ln, n))
    return clamp_jet(floor_scale(k, eps) - n);
  return clamp_jet(k * eps.num() - (n + 1));
}

/// Admissible range for s(kL, x); degree is (-K)^n for Fano, L^n for
/// TrivialK, ignored for General (no lower bound exists there).
inline JetInterval jet_interval(CanonicalClass cls, const Integer& k,
                                const Rational& eps, const Integer& n,
                                const Integer& degree) {
  JetInterval iv;
  iv.k = k;
  iv.s_hi = upper_jet_bound(k, eps);
  switch (cls) {
    case CanonicalClass::Fano:
      iv.s_lo = fano_lower_bound(k, eps, n, degree);
      break;
    case CanonicalClass::TrivialK:
      iv.s_lo = trivialK_lower_bound(k, eps, n, degree);
      break;
    case CanonicalClass::General:
      iv.s_lo = -1;
      break;
  }
  return iv;
}

/// Smallest k >= 1 with floor((k+1) eps) - b > floor(k eps), or absent when
/// eps <= b (then the gap inequality holds for every k).  The search stops
/// at den(eps) + 1; a witness is guaranteed in that range when eps > b.
inline std::optional<Integer> floor_gap_witness(const Rational& eps,
                                                const Integer& b) {
  if (eps.sign() <= 0)
    throw invalid_input("floor_gap_witness: eps must be positive");
  if (b < 0)
    throw invalid_input("floor_gap_witness: b must be nonnegative");
  if (eps <= Rational(b))
    return std::nullopt;
  const Integer stop = eps.den() + 1;
  for (Integer k = 1; k <= stop; ++k) {
    if (floor_scale(k + 1, eps) - b > floor_scale(k, eps))
      return k;
  }
  throw std::logic_error("floor_gap_witness: no witness within den(eps)+1");
}

/// Corollary cap on eps(-K_X, x): n when the n-th root of Kn is not an
/// integer, n+1 otherwise.  The degree bound eps <= Kn^(1/n) is reported
/// alongside; consumers take the minimum.
inline SeshadriCap fano_seshadri_cap(const Integer& n, const Integer& Kn) {
  if (n < 1 || Kn < 1)
    throw invalid_input("fano_seshadri_cap: n and Kn must be positive");
  SeshadriCap cap;
  cap.root_is_integer = perfect_nth_root(Kn, n).has_value();
  cap.corollary_bound = cap.root_is_integer ? n + 1 : n;
  cap.root_bound = {Kn, n};
  return cap;
}

/// The effective cap min(corollary_bound, floor-root when the root is an
/// integer), as an exact upper bound usable in comparisons.
inline Integer effective_cap(const SeshadriCap& cap) {
  if (!cap.root_is_integer)
    return cap.corollary_bound;
  const Integer root = integer_nth_root(cap.root_bound.first,
                                        cap.root_bound.second);
  return root < cap.corollary_bound ? root : cap.corollary_bound;
}

/// Largest s with s <= k eps - 1/m when eps is computed by a curve singular
/// at x; always strictly below k eps.
inline Integer singular_curve_cap(const Integer& k,
                                  const SingularCurveData& data) {
  if (data.m <= 1)
    throw invalid_input("singular_curve_cap: curve must be singular (m >= 2)");
  if (data.L_dot_C < 1)
    throw invalid_input("singular_curve_cap: L.C must be positive");
  if (k < 1)
    throw invalid_input("singular_curve_cap: k must be positive");
  Integer t = k * data.L_dot_C - 1;
  // operands positive, so plain division floors
  return clamp_jet(t / data.m);
}

/// Surface-only Hodge-index consistency flags for a computing curve smooth
/// at x: L^2 C^2 <= (L.C)^2, C^2 <= 1, and C^2 <= 0 when eps^2 < L^2.
inline IndexTheoremVerdict index_theorem_check(const Integer& L2,
                                               const Integer& L_dot_C,
                                               const Integer& C2,
                                               const Rational& eps) {
  if (L2 < 1 || L_dot_C < 1)
    throw invalid_input("index_theorem_check: L^2 and L.C must be positive");
  IndexTheoremVerdict v;
  v.hodge_ok = L2 * C2 <= L_dot_C * L_dot_C;
  v.smooth_case_C2_le_1 = C2 <= 1;
  if (eps * eps < Rational(L2))
    v.strict_case_C2_le_0 = (C2 <= 0);
  return v;
}

/// Beltrametti-Sommese obstruction: with s-jet generation at all points,
/// (k(-K_X))^n < s^n + s^(n-1) forces X to be projective space.
inline BsVerdict bs_projective_space_test(const Integer& n, const Integer& Kn,
                                          const Integer& k, const Integer& s) {
  if (s < 1)
    throw invalid_input("bs_projective_space_test: requires s >= 1");
  const auto e = static_cast<unsigned>(n);
  const Integer lhs = boost::multiprecision::pow(k, e) * Kn;
  const Integer rhs = boost::multiprecision::pow(s, e) +
                      boost::multiprecision::pow(s, e - 1);
  return lhs < rhs ? BsVerdict::MustBeProjectiveSpace
                   : BsVerdict::NoConclusion;
}

/// Classification of a Fano input by its Seshadri value: eps = n+1 with
/// (-K)^n = (n+1)^n identifies projective space; eps above the effective
/// cap (or eps = n+1 with mismatched degree) is inconsistent input.
inline PnVerdict pn_verdict(const Integer& n, const Integer& Kn,
                            const Rational& eps) {
  if (eps.sign() <= 0)
    throw invalid_input("pn_verdict: eps must be positive");
  if (eps == Rational(n + 1)) {
    const Integer expected =
        boost::multiprecision::pow(Integer(n + 1), static_cast<unsigned>(n));
    return Kn == expected ? PnVerdict::IsProjectiveSpace
                          : PnVerdict::BoundViolated;
  }
  const SeshadriCap cap = fano_seshadri_cap(n, Kn);
  if (eps > Rational(effective_cap(cap)) ||
      cmp_to_nth_root(eps, Kn, n) == RootOrdering::Above)
    return PnVerdict::BoundViolated;
  return PnVerdict::NoConclusion;
}

}  // namespace jets
