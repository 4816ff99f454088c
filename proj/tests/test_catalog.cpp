#include <catch2/catch_amalgamated.hpp>

#include "jets/catalog.hpp"

using namespace jets;

TEST_CASE("catalog loads and every record validates") {
  const auto cat = load_catalog();
  CHECK(cat.size() >= 20);
  for (const auto& rec : cat) {
    INFO(rec.id);
    CHECK(validate(rec).empty());
  }
}

TEST_CASE("catalog load is deterministic") {
  const auto a = load_catalog();
  const auto b = load_catalog();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].degree == b[i].degree);
    CHECK(a[i].eps == b[i].eps);
    CHECK(a[i].known_s == b[i].known_s);
  }
}

TEST_CASE("fetching specific records") {
  const auto ppas = find_record("ppas");
  REQUIRE(ppas.has_value());
  CHECK(ppas->eps->value == Rational(4, 3));
  CHECK(ppas->degree == 2);
  REQUIRE(ppas->surface.has_value());
  CHECK(ppas->surface->L2 == 2);
  REQUIRE(ppas->singular_curve.has_value());
  CHECK(ppas->singular_curve->data.L_dot_C == 4);
  CHECK(ppas->singular_curve->data.m == 3);
  CHECK(ppas->singular_curve->note.find("derived") != std::string::npos);

  const auto dp3 = find_record("del_pezzo_3");
  REQUIRE(dp3.has_value());
  CHECK(dp3->degree == 6);
  CHECK_FALSE(dp3->eps.has_value());

  const auto p3 = find_record("projective_space_3");
  REQUIRE(p3.has_value());
  CHECK(p3->degree == 64);
  CHECK(p3->eps->value == Rational(4));

  CHECK_FALSE(find_record("no_such_variety").has_value());
}

TEST_CASE("every recorded eps respects the degree and Fano caps") {
  for (const auto& rec : load_catalog()) {
    if (!rec.eps)
      continue;
    INFO(rec.id);
    CHECK(cmp_to_nth_root(rec.eps->value, rec.degree, rec.n) !=
          RootOrdering::Above);
    if (rec.cls == CanonicalClass::Fano) {
      const auto cap = fano_seshadri_cap(rec.n, rec.degree);
      CHECK(rec.eps->value <= Rational(effective_cap(cap)));
    }
  }
}

TEST_CASE("validate flags a degree-bound violation") {
  auto rec = *find_record("ppas");
  rec.eps->value = Rational(3, 2);
  const auto violations = validate(rec);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().find("degree-bound") != std::string::npos);
}

TEST_CASE("validate flags a known_s value outside its interval") {
  auto rec = *find_record("projective_space_2");
  rec.known_s.push_back({2, 7, false, ""});
  const auto violations = validate(rec);
  REQUIRE_FALSE(violations.empty());
  CHECK(violations.front().find("interval violation") != std::string::npos);
}

TEST_CASE("validate flags adjunction-parity failures") {
  auto rec = *find_record("quartic_generic");
  rec.surface->L2 = 3;
  CHECK_FALSE(validate(rec).empty());
}
