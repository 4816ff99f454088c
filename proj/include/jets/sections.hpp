#pragma once

#include <optional>
#include <vector>

#include "jets/bounds.hpp"
#include "jets/exactmath.hpp"

namespace jets {

/// Surface Riemann-Roch data for h0(kL): chi(O_X), L^2, L.K_X, and the
/// smallest k for which the Riemann-Roch value is the actual h0.
struct SurfaceSections {
  Integer chi;
  Integer L2;
  Integer L_dot_K;
  std::optional<Integer> exact_from;
};

struct H0Value {
  Integer value;
  bool exact;  // false: value is only a lower bound for h0
};

/// A jet interval after section-count pruning.  The feasible set is always
/// a prefix [s_lo, feasible_hi] of the raw interval, possibly empty.
struct PrunedRow {
  Integer k;
  JetInterval raw;
  std::optional<H0Value> h0;  // absent when the row was not pruned
  Integer feasible_lo;
  Integer feasible_hi;  // feasible_hi < feasible_lo encodes the empty set

  bool feasible_empty() const { return feasible_hi < feasible_lo; }

  std::vector<Integer> feasible() const {
    std::vector<Integer> out;
    for (Integer s = feasible_lo; s <= feasible_hi; ++s)
      out.push_back(s);
    return out;
  }
};

/// Euler characteristic chi(kL) = chi(O_X) + (k^2 L^2 - k L.K) / 2.
/// The halved quantity is an integer whenever L^2 + L.K is even.
inline Integer rr_value(const Integer& k, const SurfaceSections& d) {
  if (k < 1)
    throw invalid_input("rr_value: k must be positive");
  const Integer t = k * k * d.L2 - k * d.L_dot_K;
  if (boost::multiprecision::abs(t) % 2 != 0)
    throw invalid_input(
        "rr_value: k^2 L^2 - k L.K is odd (descriptor violates adjunction "
        "parity)");
  return d.chi + t / 2;
}

/// max(0, chi(kL)), flagged exact once k reaches the descriptor's window.
inline H0Value h0_model(const Integer& k, const SurfaceSections& d) {
  Integer v = rr_value(k, d);
  if (v < 0)
    v = 0;
  const bool exact = d.exact_from && k >= *d.exact_from;
  return {v, exact};
}

/// Sections needed for s-jets at a point: C(s+n, n); zero for s < 0.
inline Integer jet_codim(const Integer& s, const Integer& n) {
  if (n < 1)
    throw invalid_input("jet_codim: n must be positive");
  if (s < 0)
    return 0;
  return binomial(s + n, n);
}

/// Drops every s in the interval needing more than h0 sections.  jet_codim
/// is monotone in s, so the survivors form a prefix.
inline PrunedRow prune_interval(const JetInterval& raw, const Integer& h0,
                                const Integer& n) {
  if (h0 < 0)
    throw invalid_input("prune_interval: h0 must be nonnegative");
  PrunedRow row;
  row.k = raw.k;
  row.raw = raw;
  row.feasible_lo = raw.s_lo;
  Integer hi = raw.s_lo - 1;
  for (Integer s = raw.s_lo; s <= raw.s_hi; ++s) {
    if (jet_codim(s, n) > h0)
      break;
    hi = s;
  }
  row.feasible_hi = hi;
  return row;
}

/// Largest s >= -1 with C(s+2, 2) <= h0(kL); -1 when h0 = 0.
inline Integer max_s_by_sections(const Integer& k, const SurfaceSections& d) {
  const Integer h0 = h0_model(k, d).value;
  Integer s = -1;
  while (jet_codim(s + 1, 2) <= h0)
    ++s;
  return s;
}

/// Descriptor slice consumed by table_rows.
struct TableDescriptor {
  CanonicalClass cls;
  Integer n;
  Integer degree;
  Rational eps;
  std::optional<SurfaceSections> surface;
};

/// One PrunedRow per k in [k_from, k_to]; with prune set, the feasible set
/// comes from section counting against the surface h0 model.
inline std::vector<PrunedRow> table_rows(const TableDescriptor& d,
                                         const Integer& k_from,
                                         const Integer& k_to, bool prune) {
  if (k_from < 1 || k_to < k_from)
    throw invalid_input("table_rows: need 1 <= k_from <= k_to");
  if (prune && !d.surface)
    throw invalid_input("table_rows: pruning requires surface section data");
  std::vector<PrunedRow> rows;
  for (Integer k = k_from; k <= k_to; ++k) {
    const JetInterval raw = jet_interval(d.cls, k, d.eps, d.n, d.degree);
    PrunedRow row;
    if (prune) {
      const H0Value h0 = h0_model(k, *d.surface);
      row = prune_interval(raw, h0.value, d.n);
      row.h0 = h0;
    } else {
      row.k = k;
      row.raw = raw;
      row.feasible_lo = raw.s_lo;
      row.feasible_hi = raw.s_hi;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Least k0 such that for all k >= k0 section counting rules out
/// s = k e - 1, forcing s(kL,x) into {ke-3, ke-2}.  Requires K trivial and
/// eps = e = sqrt(L^2) an integer; then k0 = floor(2 chi / e) + 1.
inline Integer two_value_threshold(const SurfaceSections& d,
                                   const Integer& e) {
  if (e < 1 || e * e != d.L2)
    throw invalid_input("two_value_threshold: need e^2 = L^2");
  if (d.L_dot_K != 0)
    throw invalid_input("two_value_threshold: needs L.K = 0 (K trivial)");
  if (d.chi < 0)
    throw invalid_input("two_value_threshold: negative chi unsupported");
  // C(ke+1, 2) > chi + k^2 e^2 / 2  <=>  k e / 2 > chi  <=>  k > 2 chi / e
  return (2 * d.chi) / e + 1;
}

/// h0 of a general line bundle of the given degree on a genus-g curve.
inline Integer general_curve_h0(const Integer& g, const Integer& degree) {
  if (g < 1)
    throw invalid_input("general_curve_h0: g must be positive");
  if (degree < 0)
    throw invalid_input("general_curve_h0: degree must be nonnegative");
  const Integer v = degree - g + 1;
  return v < 0 ? Integer(0) : v;
}

/// h0(kL) on C x C for L = p1*D + p2*D with D general of degree 1: the
/// Kunneth square of the curve count.
inline Integer kunneth_h0(const Integer& g, const Integer& k) {
  if (k < 1)
    throw invalid_input("kunneth_h0: k must be positive");
  const Integer h = general_curve_h0(g, k);
  return h * h;
}

}  // namespace jets
