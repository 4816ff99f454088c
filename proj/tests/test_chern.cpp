#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "jets/chern.hpp"

using namespace jets;

namespace {

// Chern-root oracle for Sym^j of an n-dimensional bundle: enumerate all
// size-j multisets of n formal roots; the rank is the count and the c1
// coefficient is the total root-degree divided by n.
struct SymOracle {
  Integer rank = 0;
  Integer total_degree = 0;
};

void enumerate(long long n, long long j, long long first, long long degree,
               SymOracle& acc) {
  if (j == 0) {
    acc.rank += 1;
    acc.total_degree += degree;
    return;
  }
  for (long long r = first; r < n; ++r)
    enumerate(n, j - 1, r, degree + r + 1, acc);
}

SymOracle sym_oracle(long long n, long long j) {
  // root i carries formal degree i+1 so the total over all roots is n(n+1)/2
  SymOracle acc;
  enumerate(n, j, 0, 0, acc);
  return acc;
}

}  // namespace

TEST_CASE("sym_cotangent_c1 examples") {
  const SymC1 s22 = sym_cotangent_c1(2, 2);
  CHECK(s22.rank == 3);
  CHECK(s22.expr == DivisorExpression{0, 3});

  const SymC1 s32 = sym_cotangent_c1(3, 2);
  CHECK(s32.rank == 6);
  CHECK(s32.expr == DivisorExpression{0, 4});

  for (long long n = 1; n <= 5; ++n) {
    const SymC1 s = sym_cotangent_c1(n, 0);
    CHECK(s.rank == 1);
    CHECK(s.expr == DivisorExpression{0, 0});
  }
}

TEST_CASE("sym_cotangent_c1 matches the Chern-root multiset oracle") {
  for (long long n = 1; n <= 5; ++n) {
    // sum of the formal root degrees 1..n
    const Integer root_sum = Integer(n) * (n + 1) / 2;
    for (long long j = 0; j <= 6; ++j) {
      const SymOracle oracle = sym_oracle(n, j);
      const SymC1 got = sym_cotangent_c1(n, j);
      CHECK(got.rank == oracle.rank);
      // oracle c1 coefficient: total degree / root_sum, always integral
      CHECK(oracle.total_degree % root_sum == 0);
      CHECK(got.expr.b == oracle.total_degree / root_sum);
    }
  }
}

TEST_CASE("jet_c1 examples") {
  CHECK(jet_c1(1, 2) == DivisorExpression{3, 3});
  CHECK(jet_c1(2, 0) == DivisorExpression{1, 0});
  CHECK(jet_c1(4, 5) == DivisorExpression{126, 126});
}

TEST_CASE("jet_c1 closed form equals the telescoped per-step sum") {
  for (long long n = 1; n <= 6; ++n)
    for (long long k = 0; k <= 8; ++k) {
      // step j contributes Sym^j Omega tensor L: rank copies of c1(L)
      // plus the Sym c1 itself
      DivisorExpression total{0, 0};
      for (long long j = 0; j <= k; ++j) {
        const SymC1 s = sym_cotangent_c1(n, j);
        total = total + DivisorExpression{s.rank, s.expr.b};
      }
      CHECK(jet_c1(n, k) == total);
    }
}

TEST_CASE("anticanonical jet determinant is trivial for every n") {
  for (long long n = 1; n <= 12; ++n) {
    CHECK(anticanonical_jet_trivial(n));
    CHECK(binomial(2 * n + 1, n) == binomial(2 * n + 1, n + 1));
  }
}

TEST_CASE("mori_positivity_check examples") {
  const MoriVerdict p2 =
      mori_positivity_check(SplittingType({1, 2}, 3));
  CHECK(p2.all_positive);

  const MoriVerdict bad =
      mori_positivity_check(SplittingType({0, 3}, 3));
  CHECK_FALSE(bad.all_positive);
  REQUIRE(bad.offending_index.has_value());
  CHECK(*bad.offending_index == 0);

  const MoriVerdict p1 = mori_positivity_check(SplittingType({2}, 2));
  CHECK(p1.all_positive);

  CHECK_THROWS_AS(SplittingType({1, 1}, 3), invalid_input);
  CHECK_THROWS_AS(SplittingType({0}, 0), invalid_input);
}

TEST_CASE("AllPositive forces every summand degree to be at least one") {
  const std::vector<std::vector<long long>> cases = {
      {1, 2}, {3, 1, 2}, {1, 1, 1, 1}, {2, 2, 2}, {5, 1}};
  for (const auto& a : cases) {
    Integer b = 0;
    std::vector<Integer> ai;
    for (long long x : a) {
      ai.push_back(x);
      b += x;
    }
    const MoriVerdict v = mori_positivity_check(SplittingType(ai, b));
    if (v.all_positive)
      for (const Integer& x : ai)
        CHECK(x >= 1);
  }
}
