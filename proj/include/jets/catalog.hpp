#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jets/bounds.hpp"
#include "jets/sections.hpp"

namespace jets {

/// Which points a Seshadri value applies to.  The literature distinguishes
/// "for every point" from very-general / generic claims, and the
/// distinction matters when consuming the bounds.
struct PointClass {
  enum class Tag { AllPoints, VeryGeneral, Generic, Special };
  Tag tag = Tag::AllPoints;
  std::string label;  // set only for Special

  friend bool operator==(const PointClass&, const PointClass&) = default;
};

struct EpsInfo {
  Rational value;
  PointClass point_class;
  std::string source;  // citation or derivation note

  friend bool operator==(const EpsInfo&, const EpsInfo&) = default;
};

/// A known or bounded value of s(kL, x) recorded from the literature.
struct KnownJetFact {
  Integer k;
  Integer s;
  bool at_least = false;  // true: only s(kL,x) >= s is known
  std::string note;

  friend bool operator==(const KnownJetFact&, const KnownJetFact&) = default;
};

struct SingularCurveInfo {
  SingularCurveData data;
  std::string note;
};

/// Polarized-variety descriptor aggregating everything the bounds and
/// sections modules consume.
struct VarietyRecord {
  std::string id;
  std::string name;
  Integer n;
  CanonicalClass cls;
  Integer degree;  // L^n, or (-K)^n for Fano
  std::optional<EpsInfo> eps;
  std::optional<SurfaceSections> surface;
  std::optional<SingularCurveInfo> singular_curve;
  std::vector<KnownJetFact> known_s;
  std::optional<Integer> genus;  // product-of-curves records only

  TableDescriptor table_descriptor() const {
    if (!eps)
      throw invalid_input("record '" + id + "' has no Seshadri value");
    return {cls, n, degree, eps->value, surface};
  }
};

/// Invariant violations are data, not failures.
inline std::vector<std::string> validate(const VarietyRecord& rec) {
  std::vector<std::string> out;
  if (rec.n < 1)
    out.push_back(rec.id + ": dimension must be positive");
  if (rec.degree < 1)
    out.push_back(rec.id + ": degree must be positive");
  if (rec.eps) {
    if (rec.eps->value.sign() <= 0) {
      out.push_back(rec.id + ": eps must be positive");
    } else if (cmp_to_nth_root(rec.eps->value, rec.degree, rec.n) ==
               RootOrdering::Above) {
      out.push_back(rec.id + ": degree-bound violation: eps^n = " +
                    (rec.eps->value * rec.eps->value).str() +
                    " exceeds the degree " + rec.degree.str() +
                    " (n = " + rec.n.str() + ")");
    } else if (rec.cls == CanonicalClass::Fano) {
      const SeshadriCap cap = fano_seshadri_cap(rec.n, rec.degree);
      if (rec.eps->value > Rational(effective_cap(cap)))
        out.push_back(rec.id + ": eps exceeds the Fano Seshadri cap " +
                      effective_cap(cap).str());
    }
  }
  if (rec.surface) {
    if (rec.n != 2)
      out.push_back(rec.id + ": surface section data requires n = 2");
    for (long long k : {1, 2}) {
      const Integer t = Integer(k) * k * rec.surface->L2 -
                        Integer(k) * rec.surface->L_dot_K;
      if (boost::multiprecision::abs(t) % 2 != 0)
        out.push_back(rec.id + ": adjunction parity fails at k = " +
                      std::to_string(k));
    }
  }
  if (rec.singular_curve && rec.singular_curve->data.m < 2)
    out.push_back(rec.id + ": singular computing curve needs mult >= 2");
  if (rec.eps && rec.eps->value.sign() > 0 &&
      cmp_to_nth_root(rec.eps->value, rec.degree, rec.n) !=
          RootOrdering::Above) {
    for (const KnownJetFact& f : rec.known_s) {
      const JetInterval iv =
          jet_interval(rec.cls, f.k, rec.eps->value, rec.n, rec.degree);
      if (f.s < iv.s_lo || f.s > iv.s_hi)
        out.push_back(rec.id + ": interval violation: s = " + f.s.str() +
                      " at k = " + f.k.str() + " lies outside [" +
                      iv.s_lo.str() + ", " + iv.s_hi.str() + "]");
    }
  }
  return out;
}

namespace detail {

inline PointClass all_points() { return {PointClass::Tag::AllPoints, ""}; }
inline PointClass very_general() {
  return {PointClass::Tag::VeryGeneral, ""};
}
inline PointClass generic() { return {PointClass::Tag::Generic, ""}; }
inline PointClass special(std::string label) {
  return {PointClass::Tag::Special, std::move(label)};
}

inline VarietyRecord projective_space(long long n) {
  VarietyRecord rec;
  rec.id = "projective_space_" + std::to_string(n);
  rec.name = "Projective space P^" + std::to_string(n) + " with L = -K";
  rec.n = n;
  rec.cls = CanonicalClass::Fano;
  rec.degree = boost::multiprecision::pow(Integer(n + 1),
                                          static_cast<unsigned>(n));
  rec.eps = EpsInfo{Rational(n + 1), all_points(), "O(1) lines through x"};
  for (long long k = 1; k <= 3; ++k)
    rec.known_s.push_back({k, Integer(k) * (n + 1), false, ""});
  return rec;
}

inline VarietyRecord del_pezzo(long long r) {
  VarietyRecord rec;
  rec.id = "del_pezzo_" + std::to_string(r);
  rec.name = "Del Pezzo surface, blow-up of P^2 in " + std::to_string(r) +
             " points";
  rec.n = 2;
  rec.cls = CanonicalClass::Fano;
  rec.degree = 9 - r;
  // only the caps are recorded; precise values are in Broustet's paper
  return rec;
}

}  // namespace detail

/// The built-in descriptors.  Deterministic; every record passes validate.
inline std::vector<VarietyRecord> load_catalog() {
  using namespace detail;
  std::vector<VarietyRecord> cat;

  for (long long n = 1; n <= 6; ++n)
    cat.push_back(projective_space(n));

  {
    VarietyRecord rec;
    rec.id = "p1xp1";
    rec.name = "P^1 x P^1 with L = -K";
    rec.n = 2;
    rec.cls = CanonicalClass::Fano;
    rec.degree = 8;
    rec.eps = EpsInfo{Rational(2), all_points(), "K = O(-2,-2)"};
    cat.push_back(rec);
  }

  for (long long r = 1; r <= 8; ++r)
    cat.push_back(del_pezzo(r));

  {
    VarietyRecord rec;
    rec.id = "ppas";
    rec.name = "Principally polarized abelian surface, L = Theta";
    rec.n = 2;
    rec.cls = CanonicalClass::TrivialK;
    rec.degree = 2;
    rec.eps = EpsInfo{Rational(4, 3), all_points(), "Steffens, Bauer"};
    rec.surface = SurfaceSections{0, 2, 0, Integer(1)};
    rec.singular_curve = SingularCurveInfo{
        {4, 3},
        "derived: minimal-denominator pair for 4/3; the literature "
        "guarantees a singular computing curve but states no pair"};
    rec.known_s.push_back({1, 0, false, "x not on Theta"});
    rec.known_s.push_back({1, -1, false, "x on Theta"});
    rec.known_s.push_back({2, 1, true, "generic x (Kummer map)"});
    rec.known_s.push_back({2, 0, false, "x over a Kummer double point"});
    cat.push_back(rec);
  }

  {
    VarietyRecord rec;
    rec.id = "abelian_12";
    rec.name = "Abelian surface of type (1,2), Picard number one";
    rec.n = 2;
    rec.cls = CanonicalClass::TrivialK;
    rec.degree = 4;
    rec.eps = EpsInfo{Rational(2), all_points(), "Bauer"};
    rec.surface = SurfaceSections{0, 4, 0, Integer(1)};
    cat.push_back(rec);
  }

  {
    VarietyRecord rec;
    rec.id = "quartic_with_line";
    rec.name = "Smooth quartic surface containing a line, x on the line";
    rec.n = 2;
    rec.cls = CanonicalClass::TrivialK;
    rec.degree = 4;
    rec.eps = EpsInfo{Rational(1), special("x on the line"), "the line"};
    for (long long k = 1; k <= 4; ++k)
      rec.known_s.push_back({k, k, false, "attains the upper bound"});
    cat.push_back(rec);
  }

  {
    VarietyRecord rec;
    rec.id = "quartic_generic";
    rec.name = "Smooth quartic surface, general point";
    rec.n = 2;
    rec.cls = CanonicalClass::TrivialK;
    rec.degree = 4;
    rec.eps = EpsInfo{Rational(2), generic(), "Bauer"};
    rec.surface = SurfaceSections{2, 4, 0, Integer(1)};
    cat.push_back(rec);
  }

  {
    VarietyRecord rec;
    rec.id = "degree9_p3";
    rec.name = "Smooth degree-9 surface in P^3 of Picard number one";
    rec.n = 2;
    rec.cls = CanonicalClass::General;
    rec.degree = 9;
    rec.eps = EpsInfo{Rational(3), very_general(), "Steffens"};
    // chi(O_X) = 1 + C(d-1, 3) for a smooth degree-d surface in P^3
    rec.surface = SurfaceSections{57, 9, 45, Integer(6)};
    cat.push_back(rec);
  }

  {
    VarietyRecord rec;
    rec.id = "cxc_g5";
    rec.name = "C x C for a genus-5 curve, L the split degree-(1,1) bundle";
    rec.n = 2;
    rec.cls = CanonicalClass::General;
    rec.degree = 2;
    rec.eps = EpsInfo{Rational(1), all_points(), "fibers through x"};
    rec.genus = 5;
    for (long long k = 1; k <= 4; ++k)
      rec.known_s.push_back({k, -1, false, "h0(kL) = 0"});
    cat.push_back(rec);
  }

  for (const VarietyRecord& rec : cat) {
    const auto violations = validate(rec);
    if (!violations.empty())
      throw std::logic_error("catalog record '" + rec.id +
                             "' failed validation: " + violations.front());
  }
  return cat;
}

inline std::optional<VarietyRecord> find_record(const std::string& id) {
  for (VarietyRecord& rec : load_catalog())
    if (rec.id == id)
      return rec;
  return std::nullopt;
}

}  // namespace jets
