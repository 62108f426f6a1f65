#include "helpers.hpp"

#include "cogrowth/oracle.hpp"
#include "cogrowth/solver.hpp"

#include <gtest/gtest.h>

using namespace cogrowth;
using namespace cogrowth::testing;

namespace {

LaurentPoly row_poly(const std::map<Integer, Integer> &row) {
  std::vector<LaurentPoly::Term> t(row.begin(), row.end());
  return LaurentPoly::from_terms(std::move(t));
}

void expect_matches_oracle(const GroupSpec &spec, int n_max) {
  const SolveResult s = solve(spec, n_max);
  const CountTable t = count_tables(spec, n_max);
  for (int n = 0; n <= n_max; ++n) {
    EXPECT_EQ(s.G[n], row_poly(t.row(Family::g, n))) << spec.to_string() << " G n=" << n;
    EXPECT_EQ(s.L[n], row_poly(t.row(Family::l, n))) << spec.to_string() << " L n=" << n;
    EXPECT_EQ(s.K[n], row_poly(t.row(Family::k, n))) << spec.to_string() << " K n=" << n;
  }
}

} // namespace

TEST(GroupSpec, Validates) {
  EXPECT_THROW(GroupSpec(0, 1), InvalidArgument);
  EXPECT_THROW(GroupSpec(1, -2), InvalidArgument);
  EXPECT_EQ(GroupSpec(2, 3).to_string(), "BS(2,3)");
}

TEST(Solve, FreeAbelianValues) {
  const auto s = solve(GroupSpec(1, 1), 4);
  EXPECT_EQ(coeff(s.G, 2, 0), 4);
  EXPECT_EQ(coeff(s.G, 4, 0), 36);
}

TEST(Solve, OrderZeroIsOne) {
  for (const auto &spec : {GroupSpec(1, 1), GroupSpec(2, 3), GroupSpec(4, 1)}) {
    const auto s = solve(spec, 0);
    EXPECT_EQ(s.G, TruncatedSeries::one(0));
    EXPECT_EQ(s.L, TruncatedSeries::one(0));
    EXPECT_EQ(s.K, TruncatedSeries::one(0));
  }
}

TEST(Solve, MatchesOracleBS22) { expect_matches_oracle(GroupSpec(2, 2), 8); }
TEST(Solve, MatchesOracleBS21) { expect_matches_oracle(GroupSpec(2, 1), 9); }
TEST(Solve, MatchesOracleBS12) { expect_matches_oracle(GroupSpec(1, 2), 9); }
TEST(Solve, MatchesOracleBS32) { expect_matches_oracle(GroupSpec(3, 2), 9); }
TEST(Solve, MatchesOracleBS23) { expect_matches_oracle(GroupSpec(2, 3), 9); }
TEST(Solve, MatchesOracleBS31) { expect_matches_oracle(GroupSpec(3, 1), 9); }

TEST(Solve, StabilisesWithinBound) {
  for (const auto &spec : {GroupSpec(1, 1), GroupSpec(2, 1), GroupSpec(3, 3)}) {
    const auto s = solve(spec, 10);
    EXPECT_LE(s.sweeps, 10 + 2);
    EXPECT_EQ(s.order, 10);
    EXPECT_EQ(s.spec, spec);
  }
}

TEST(Solve, ResidualsVanish) {
  for (const auto &spec :
       {GroupSpec(1, 1), GroupSpec(2, 2), GroupSpec(2, 1), GroupSpec(2, 3)}) {
    const auto s = solve(spec, 10);
    EXPECT_TRUE(system_residuals(spec, s.L, s.K, s.G).all_zero())
        << spec.to_string();
  }
}

TEST(Solve, ResidualDetectsPerturbation) {
  const GroupSpec spec(2, 2);
  const auto s = solve(spec, 6);
  TruncatedSeries G = s.G;
  G.set(4, G[4] + LaurentPoly(1));
  EXPECT_FALSE(system_residuals(spec, s.L, s.K, G).all_zero());
}

TEST(Solve, CoefficientsAreCountsAndBoundedByG) {
  for (const auto &spec : {GroupSpec(2, 2), GroupSpec(2, 1), GroupSpec(3, 2)}) {
    const auto s = solve(spec, 10);
    for (int n = 0; n <= 10; ++n) {
      for (const auto *S : {&s.G, &s.L, &s.K})
        for (const auto &[k, c] : (*S)[n].terms())
          EXPECT_GT(sgn(c), 0);
      for (const auto &[k, c] : s.L[n].terms())
        EXPECT_LE(c, coeff(s.G, n, k));
      for (const auto &[k, c] : s.K[n].terms())
        EXPECT_LE(c, coeff(s.G, n, k));
    }
  }
}

TEST(Solve, SymmetricCaseHasLEqualK) {
  for (long N = 1; N <= 3; ++N) {
    const auto s = solve(GroupSpec(N, N), 10);
    EXPECT_EQ(s.L, s.K) << "N=" << N;
  }
}

TEST(SolveSymmetric, FreeAbelianValues) {
  EXPECT_EQ(diagonal_q0(solve_symmetric(1, 8).G),
            ints({1, 0, 4, 0, 36, 0, 400, 0, 4900}));
}

TEST(SolveSymmetric, AgreesWithGeneralPath) {
  for (long N = 1; N <= 4; ++N) {
    const auto a = solve_symmetric(N, 10);
    const auto b = solve(GroupSpec(N, N), 10);
    EXPECT_EQ(a.G, b.G) << "N=" << N;
    EXPECT_EQ(a.L, b.L) << "N=" << N;
    EXPECT_EQ(a.K, b.K) << "N=" << N;
  }
}

TEST(SolveSymmetric, CogrowthMatchesOracleBS33) {
  const auto t = count_tables(GroupSpec(3, 3), 8);
  const auto c = diagonal_q0(solve_symmetric(3, 8).G);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(c[n], t.get(Family::g, n, 0)) << "n=" << n;
}

TEST(CogrowthCoeffs, FreeAbelian) {
  const auto c = cogrowth_coeffs(GroupSpec(1, 1), 12);
  for (int n = 0; n <= 12; ++n)
    EXPECT_EQ(c[n], n % 2 ? Integer(0)
                          : binomial(n, n / 2) * binomial(n, n / 2));
}

TEST(CogrowthCoeffs, FirstTermsForAnyGroup) {
  for (const auto &spec : {GroupSpec(1, 1), GroupSpec(2, 5), GroupSpec(4, 4),
                           GroupSpec(3, 1)}) {
    const auto c = cogrowth_coeffs(spec, 3);
    EXPECT_EQ(c[0], 1);
    EXPECT_EQ(c[1], 0);
    EXPECT_EQ(c[2], 4);
  }
}

TEST(CogrowthCoeffs, BS22MatchesWordCount) {
  // Every one of the 4^6 words of length 6 is reduced to normal form
  // directly, independently of the counting tables.
  const GroupSpec spec(2, 2);
  const Letter letters[] = {Letter::a, Letter::a_inv, Letter::b, Letter::b_inv};
  long trivial = 0;
  std::vector<Letter> w(6);
  for (int code = 0; code < 4096; ++code) {
    for (int i = 0, c = code; i < 6; ++i, c /= 4)
      w[i] = letters[c % 4];
    trivial += normal_form(w, spec).is_identity() ? 1 : 0;
  }
  EXPECT_EQ(cogrowth_coeffs(spec, 6)[6], trivial);
}

TEST(CheckLK, HoldsForAllTestedGroups) {
  EXPECT_TRUE(check_LK_q1(GroupSpec(2, 1), 10));
  EXPECT_TRUE(check_LK_q1(GroupSpec(1, 1), 10));
  EXPECT_TRUE(check_LK_q1(GroupSpec(3, 2), 8));
  EXPECT_TRUE(check_LK_q1(GroupSpec(2, 3), 8));
}

TEST(CheckLK, LAndKDifferAsLaurentSeriesWhenNNotM) {
  // Only the values at q = 1 agree; the q-distributions differ.
  const auto s = solve(GroupSpec(2, 1), 6);
  EXPECT_NE(s.L, s.K);
}

TEST(Solve, RejectsNegativeOrder) {
  EXPECT_THROW(solve(GroupSpec(1, 1), -1), InvalidArgument);
  EXPECT_THROW(solve_symmetric(2, -1), InvalidArgument);
}
