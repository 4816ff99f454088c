#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jets/exactmath.hpp"

namespace jets {

/// Formal divisor class a * c1(L) + b * c1(K_X) in the rank-2 lattice
/// spanned by c1(L) and c1(K_X).  (0, 0) is O_X.
struct DivisorExpression {
  Integer a;
  Integer b;

  friend bool operator==(const DivisorExpression&,
                         const DivisorExpression&) = default;
  friend DivisorExpression operator+(const DivisorExpression& x,
                                     const DivisorExpression& y) {
    return {x.a + y.a, x.b + y.b};
  }
};

/// Restriction of the tangent bundle and -K_X to a rational curve:
/// f*(T_X) = sum O(a_i), f*(-K_X) = O(b) with b >= 1 and sum a_i = b.
struct SplittingType {
  std::vector<Integer> a_list;
  Integer b;

  SplittingType(std::vector<Integer> a, Integer b_) : a_list(std::move(a)),
                                                      b(std::move(b_)) {
    if (b < 1)
      throw invalid_input("SplittingType: b must be positive (-K_X ample)");
    Integer sum = 0;
    for (const Integer& ai : a_list)
      sum += ai;
    if (sum != b)
      throw invalid_input("SplittingType: sum of a_i must equal b");
  }
};

struct SymC1 {
  Integer rank;
  DivisorExpression expr;
};

struct MoriVerdict {
  bool all_positive;
  // first index with (n+1) a_i - b < 0, when any
  std::optional<std::size_t> offending_index;
};

/// rank and c1 of Sym^j Omega_X on an n-fold: rank C(n+j-1, j), c1 equal to
/// C(n+j-1, n) copies of c1(K_X).  The L-twist is the caller's business.
inline SymC1 sym_cotangent_c1(const Integer& n, const Integer& j) {
  if (n < 1 || j < 0)
    throw invalid_input("sym_cotangent_c1: need n >= 1, j >= 0");
  return {binomial(n + j - 1, j), {Integer(0), binomial(n + j - 1, n)}};
}

/// c1(J_k(L)) from the jet exact sequences, in closed form:
/// a = C(n+k, n) copies of c1(L), b = C(n+k, n+1) copies of c1(K_X).
inline DivisorExpression jet_c1(const Integer& n, const Integer& k) {
  if (n < 1 || k < 0)
    throw invalid_input("jet_c1: need n >= 1, k >= 0");
  return {binomial(n + k, n), binomial(n + k, n + 1)};
}

/// Whether c1(J_{n+1}(-K_X)) vanishes, i.e. the (a, b) coefficients of
/// jet_c1(n, n+1) agree so that L = -K_X cancels them.
inline bool anticanonical_jet_trivial(const Integer& n) {
  const DivisorExpression e = jet_c1(n, n + 1);
  return e.a == e.b;
}

/// Checks (n+1) a_i - b >= 0 for every summand; with b >= 1 this forces all
/// a_i >= 1, the hypothesis of Mori's characterization of projective space.
inline MoriVerdict mori_positivity_check(const SplittingType& st) {
  const Integer n = static_cast<long long>(st.a_list.size());
  for (std::size_t i = 0; i < st.a_list.size(); ++i) {
    if ((n + 1) * st.a_list[i] - st.b < 0)
      return {false, i};
  }
  return {true, std::nullopt};
}

}  // namespace jets
