#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "jets/bounds.hpp"

using namespace jets;

namespace {

// Independent witness oracle: scan k = 1..limit for the floor-gap failure.
std::optional<long long> scan_gap_witness(long long p, long long q,
                                          long long b, long long limit) {
  for (long long k = 1; k <= limit; ++k) {
    const long long lhs = ((k + 1) * p) / q - b;
    const long long rhs = (k * p) / q;
    if (lhs > rhs)
      return k;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("upper_jet_bound examples") {
  CHECK(upper_jet_bound(1, Rational(4, 3)) == 1);
  CHECK(upper_jet_bound(2, Rational(3)) == 6);
  CHECK(upper_jet_bound(5, Rational(4, 3)) == 6);
  // clamp: floor(1 * 1/3) = 0, stays 0; genuinely negative floors cannot
  // occur for positive eps, so the clamp is exercised via the lower bounds
  CHECK(upper_jet_bound(1, Rational(1, 3)) == 0);
  CHECK_THROWS_AS(upper_jet_bound(1, Rational(0)), invalid_input);
}

TEST_CASE("fano_lower_bound examples") {
  // projective space: lower bound meets the upper bound k(n+1)
  for (long long k = 1; k <= 5; ++k)
    CHECK(fano_lower_bound(k, Rational(3), 2, 9) == 3 * k);
  // first branch: floor((k+1) eps) - n = floor(4) - 2 = 2
  CHECK(fano_lower_bound(1, Rational(2), 2, 8) == 2);
  // alternative case on P^1: (k+1) eps - (n+1) = 2 - 2 = 0
  CHECK(fano_lower_bound(1, Rational(1), 1, 1) == 0);
  CHECK_THROWS_AS(fano_lower_bound(1, Rational(4), 2, 9), invalid_input);
}

TEST_CASE("trivialK_lower_bound examples") {
  CHECK(trivialK_lower_bound(5, Rational(4, 3), 2, 2) == 4);
  for (long long k = 2; k <= 20; ++k)
    CHECK(trivialK_lower_bound(k, Rational(2), 2, 4) == 2 * k - 3);
  CHECK(trivialK_lower_bound(1, Rational(1), 2, 4) == -1);
  CHECK_THROWS_AS(trivialK_lower_bound(1, Rational(3), 2, 4), invalid_input);
}

TEST_CASE("jet_interval examples") {
  CHECK(jet_interval(CanonicalClass::TrivialK, 3, Rational(4, 3), 2, 2) ==
        JetInterval{3, 2, 4});
  CHECK(jet_interval(CanonicalClass::Fano, 2, Rational(3), 2, 9) ==
        JetInterval{2, 6, 6});
  CHECK(jet_interval(CanonicalClass::General, 4, Rational(1), 2, 2) ==
        JetInterval{4, -1, 4});
}

TEST_CASE("lower bounds never exceed the upper bound") {
  for (long long p = 1; p <= 12; ++p)
    for (long long q = 1; q <= 6; ++q)
      for (long long k : {1, 2, 3, 10, 50, 1000}) {
        const Rational eps(p, q);
        for (long long n : {1, 2, 3}) {
          // pick a degree keeping eps at or below the root
          const Integer degree =
              boost::multiprecision::pow(Integer(p), unsigned(n)) /
                  boost::multiprecision::pow(Integer(q), unsigned(n)) +
              1;
          if (cmp_to_nth_root(eps, degree, n) == RootOrdering::Above)
            continue;
          // the Fano consistency holds for eps <= n, or for eps equal to
          // the integer root of the degree (the alternative case); other
          // inputs do not describe a Fano variety
          const auto root = perfect_nth_root(degree, n);
          const bool fano_consistent =
              eps <= Rational(n) ||
              (root && eps == Rational(*root) && eps <= Rational(n + 1));
          if (fano_consistent)
            CHECK(fano_lower_bound(k, eps, n, degree) <=
                  upper_jet_bound(k, eps));
          CHECK(trivialK_lower_bound(k, eps, n, degree) <=
                upper_jet_bound(k, eps));
        }
      }
}

TEST_CASE("TrivialK interval width is n in the first branch") {
  for (long long k = 3; k <= 40; ++k) {
    const JetInterval iv =
        jet_interval(CanonicalClass::TrivialK, k, Rational(4, 3), 2, 2);
    CHECK(iv.s_hi - iv.s_lo == 2);
  }
  // alternative branch: width n+1
  for (long long k = 2; k <= 40; ++k) {
    const JetInterval iv =
        jet_interval(CanonicalClass::TrivialK, k, Rational(2), 2, 4);
    CHECK(iv.s_hi - iv.s_lo == 3);
  }
}

TEST_CASE("floor_gap_witness examples") {
  REQUIRE(floor_gap_witness(Rational(7, 3), 2).has_value());
  CHECK(*floor_gap_witness(Rational(7, 3), 2) == 2);
  CHECK_FALSE(floor_gap_witness(Rational(2), 2).has_value());
  REQUIRE(floor_gap_witness(Rational(5, 2), 2).has_value());
  CHECK(*floor_gap_witness(Rational(5, 2), 2) == 1);
  // integer eps above b: k = 1 already works
  CHECK(*floor_gap_witness(Rational(5), 2) == 1);
}

TEST_CASE("floor_gap_witness agrees with the exhaustive scan") {
  for (long long p = 1; p <= 25; ++p)
    for (long long q = 1; q <= 12; ++q)
      for (long long b = 0; b <= 6; ++b) {
        const auto got = floor_gap_witness(Rational(p, q), b);
        const auto expect = scan_gap_witness(p, q, b, 10 * q);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
          CHECK(*got == Integer(*expect));
          CHECK(*got <= Rational(p, q).den() + 1);
        }
        CHECK(got.has_value() == (Rational(p, q) > Rational(b)));
      }
}

TEST_CASE("fano_seshadri_cap Del Pezzo examples") {
  const SeshadriCap c8 = fano_seshadri_cap(2, 8);
  CHECK(c8.corollary_bound == 2);
  CHECK_FALSE(c8.root_is_integer);
  CHECK(effective_cap(c8) == 2);

  const SeshadriCap c4 = fano_seshadri_cap(2, 4);
  CHECK(c4.corollary_bound == 3);
  CHECK(c4.root_is_integer);
  CHECK(effective_cap(c4) == 2);

  const SeshadriCap c1 = fano_seshadri_cap(2, 1);
  CHECK(c1.corollary_bound == 3);
  CHECK(effective_cap(c1) == 1);
}

TEST_CASE("singular_curve_cap examples") {
  CHECK(singular_curve_cap(3, {4, 3}) == 3);
  CHECK(singular_curve_cap(6, {4, 3}) == 7);
  CHECK(singular_curve_cap(1, {4, 3}) == 1);
  CHECK_THROWS_AS(singular_curve_cap(1, {4, 1}), invalid_input);
}

TEST_CASE("singular_curve_cap is strictly below k eps") {
  for (long long k = 1; k <= 1000; k += 7)
    for (long long lc = 1; lc <= 50; lc += 3)
      for (long long m = 2; m <= 50; m += 5) {
        const Integer cap = singular_curve_cap(k, {lc, m});
        // cap < k * lc / m as exact rationals
        CHECK(cap * m < Integer(k) * lc);
      }
}

TEST_CASE("index_theorem_check examples") {
  const auto v1 = index_theorem_check(4, 2, 0, Rational(2));
  CHECK(v1.hodge_ok);
  CHECK(v1.smooth_case_C2_le_1);
  CHECK_FALSE(v1.strict_case_C2_le_0.has_value());  // eps^2 = L^2

  const auto v2 = index_theorem_check(2, 1, 2, Rational(1));
  CHECK_FALSE(v2.hodge_ok);

  const auto v3 = index_theorem_check(4, 1, 0, Rational(1));
  CHECK(v3.hodge_ok);
  REQUIRE(v3.strict_case_C2_le_0.has_value());
  CHECK(*v3.strict_case_C2_le_0);
}

TEST_CASE("bs_projective_space_test examples") {
  CHECK(bs_projective_space_test(2, 9, 1, 3) ==
        BsVerdict::MustBeProjectiveSpace);
  CHECK(bs_projective_space_test(2, 8, 1, 2) == BsVerdict::NoConclusion);
  CHECK(bs_projective_space_test(2, 9, 2, 6) ==
        BsVerdict::MustBeProjectiveSpace);
  CHECK_THROWS_AS(bs_projective_space_test(2, 9, 1, 0), invalid_input);
}

TEST_CASE("pn_verdict examples") {
  CHECK(pn_verdict(3, 64, Rational(4)) == PnVerdict::IsProjectiveSpace);
  CHECK(pn_verdict(2, 8, Rational(5, 2)) == PnVerdict::BoundViolated);
  CHECK(pn_verdict(2, 8, Rational(2)) == PnVerdict::NoConclusion);
  // eps = n+1 but the degree is not (n+1)^n: inconsistent input
  CHECK(pn_verdict(2, 8, Rational(3)) == PnVerdict::BoundViolated);
}

TEST_CASE("P^n rigidity: interval collapses to k(n+1)") {
  for (long long n = 1; n <= 6; ++n) {
    const Integer degree =
        boost::multiprecision::pow(Integer(n + 1), unsigned(n));
    for (long long k = 1; k <= 20; ++k) {
      const JetInterval iv =
          jet_interval(CanonicalClass::Fano, k, Rational(n + 1), n, degree);
      CHECK(iv.s_lo == Integer(k) * (n + 1));
      CHECK(iv.s_hi == Integer(k) * (n + 1));
    }
  }
}

TEST_CASE("asymptotics: s_hi/k and s_lo/k approach eps") {
  const Rational eps(4, 3);
  for (long long k = 1; k <= 1000; ++k) {
    const JetInterval iv =
        jet_interval(CanonicalClass::TrivialK, k, eps, 2, 2);
    CHECK((Rational(iv.s_hi, k) - eps).abs() <= Rational(1, k));
    CHECK((Rational(iv.s_lo, k) - eps).abs() <= Rational(4, k));
  }
}
