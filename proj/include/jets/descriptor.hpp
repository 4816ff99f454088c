#pragma once

#include <json.hpp>

#include <string>

#include "jets/catalog.hpp"

namespace jets {

inline std::string to_string(CanonicalClass cls) {
  switch (cls) {
    case CanonicalClass::Fano:
      return "fano";
    case CanonicalClass::TrivialK:
      return "trivialK";
    case CanonicalClass::General:
      return "general";
  }
  throw std::logic_error("unreachable");
}

inline CanonicalClass parse_canonical_class(const std::string& s) {
  if (s == "fano")
    return CanonicalClass::Fano;
  if (s == "trivialK")
    return CanonicalClass::TrivialK;
  if (s == "general")
    return CanonicalClass::General;
  throw invalid_input("unknown canonical class '" + s +
                      "' (expected fano|trivialK|general)");
}

inline std::string to_string(const PointClass& pc) {
  switch (pc.tag) {
    case PointClass::Tag::AllPoints:
      return "all_points";
    case PointClass::Tag::VeryGeneral:
      return "very_general";
    case PointClass::Tag::Generic:
      return "generic";
    case PointClass::Tag::Special:
      return pc.label;
  }
  throw std::logic_error("unreachable");
}

inline PointClass parse_point_class(const std::string& s) {
  if (s == "all_points")
    return {PointClass::Tag::AllPoints, ""};
  if (s == "very_general")
    return {PointClass::Tag::VeryGeneral, ""};
  if (s == "generic")
    return {PointClass::Tag::Generic, ""};
  return {PointClass::Tag::Special, s};
}

/// Serializes a record to the descriptor schema.  nlohmann::json objects
/// keep keys sorted, so dumping the result is already canonical; rationals
/// are emitted reduced as "p/q" strings.
inline nlohmann::json record_to_json(const VarietyRecord& rec) {
  nlohmann::json j;
  j["id"] = rec.id;
  j["name"] = rec.name;
  j["n"] = static_cast<long long>(rec.n);
  j["class"] = to_string(rec.cls);
  j["degree"] = static_cast<long long>(rec.degree);
  if (rec.eps) {
    j["eps"] = rec.eps->value.str();
    j["point_class"] = to_string(rec.eps->point_class);
  }
  if (rec.surface) {
    nlohmann::json s;
    s["chi"] = static_cast<long long>(rec.surface->chi);
    s["L2"] = static_cast<long long>(rec.surface->L2);
    s["LK"] = static_cast<long long>(rec.surface->L_dot_K);
    if (rec.surface->exact_from)
      s["exact_from"] = static_cast<long long>(*rec.surface->exact_from);
    j["surface"] = std::move(s);
  }
  if (rec.singular_curve) {
    nlohmann::json c;
    c["LC"] = static_cast<long long>(rec.singular_curve->data.L_dot_C);
    c["m"] = static_cast<long long>(rec.singular_curve->data.m);
    j["singular_curve"] = std::move(c);
  }
  return j;
}

inline VarietyRecord record_from_json(const nlohmann::json& j) {
  const auto need = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key))
      throw invalid_input(std::string("descriptor: missing key '") + key +
                          "'");
    return j.at(key);
  };
  VarietyRecord rec;
  rec.id = need("id").get<std::string>();
  rec.name = need("name").get<std::string>();
  rec.n = need("n").get<long long>();
  rec.cls = parse_canonical_class(need("class").get<std::string>());
  rec.degree = need("degree").get<long long>();
  if (j.contains("eps")) {
    EpsInfo eps;
    eps.value = Rational::parse(j.at("eps").get<std::string>());
    if (j.contains("point_class"))
      eps.point_class = parse_point_class(j.at("point_class").get<std::string>());
    rec.eps = std::move(eps);
  }
  if (j.contains("surface")) {
    const nlohmann::json& s = j.at("surface");
    SurfaceSections d;
    d.chi = s.at("chi").get<long long>();
    d.L2 = s.at("L2").get<long long>();
    d.L_dot_K = s.at("LK").get<long long>();
    if (s.contains("exact_from"))
      d.exact_from = Integer(s.at("exact_from").get<long long>());
    rec.surface = d;
  }
  if (j.contains("singular_curve")) {
    const nlohmann::json& c = j.at("singular_curve");
    rec.singular_curve = SingularCurveInfo{
        {Integer(c.at("LC").get<long long>()),
         Integer(c.at("m").get<long long>())},
        ""};
  }
  return rec;
}

}  // namespace jets
