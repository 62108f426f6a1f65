#include "helpers.hpp"

#include "cogrowth/algebraic.hpp"
#include "cogrowth/cyclotomic.hpp"
#include "cogrowth/error.hpp"
#include "cogrowth/reference.hpp"
#include "cogrowth/solver.hpp"

#include <gtest/gtest.h>

#include <memory>

using namespace cogrowth;
using namespace cogrowth::testing;

namespace {

ZPoly zp(std::initializer_list<long> low_first) {
  return ZPoly(std::vector<Integer>(low_first.begin(), low_first.end()));
}

const std::vector<std::string> kGzQ{"G", "z", "Q"};

IntMultiPoly reference_poly(int N) {
  return parse_polynomial(*reference::reference_G_equation(N), kGzQ);
}

} // namespace

TEST(Cyclotomic, SmallCases) {
  EXPECT_EQ(cyclotomic(1), zp({-1, 1}));
  EXPECT_EQ(cyclotomic(2), zp({1, 1}));
  EXPECT_EQ(cyclotomic(6), zp({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), zp({1, 0, -1, 0, 1}));
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
}

TEST(Cyclotomic, ProductOverDivisorsIsWNMinusOne) {
  for (long N = 1; N <= 24; ++N) {
    ZPoly prod(Integer(1));
    for (long d = 1; d <= N; ++d)
      if (N % d == 0)
        prod *= cyclotomic(d);
    EXPECT_EQ(prod, ZPoly::monomial(Integer(1), N) - ZPoly(Integer(1)))
        << "N=" << N;
  }
}

TEST(CycloInt, RootOfUnitySums) {
  for (long N = 1; N <= 9; ++N) {
    const auto ring = std::make_shared<const CyclotomicRing>(N);
    for (long k = -2 * N; k <= 2 * N; ++k) {
      CycloInt s(ring, Integer(0));
      for (long j = 0; j < N; ++j)
        s += CycloInt::omega_power(ring, j * k);
      ASSERT_TRUE(s.is_rational());
      EXPECT_EQ(s.rational_part(), k % N == 0 ? N : 0)
          << "N=" << N << " k=" << k;
    }
  }
}

TEST(CycloInt, ProductOfLinearFactors) {
  // prod_j (x - w^j) = x^N - 1, checked at x = 2, 3.
  for (long N = 1; N <= 8; ++N) {
    const auto ring = std::make_shared<const CyclotomicRing>(N);
    for (long x = 2; x <= 3; ++x) {
      CycloInt prod(ring, Integer(1));
      for (long j = 0; j < N; ++j)
        prod *= CycloInt(ring, Integer(x)) - CycloInt::omega_power(ring, j);
      ASSERT_TRUE(prod.is_rational());
      Integer expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), x, N);
      EXPECT_EQ(prod.rational_part(), expect - 1);
    }
  }
}

TEST(CycloInt, LSeriesInvariantUnderRootOfUnityShift) {
  // sum_j L(z; w^j q) = N * Phi_{N,N} L, coefficient by coefficient.
  for (long N = 2; N <= 4; ++N) {
    const auto ring = std::make_shared<const CyclotomicRing>(N);
    const auto s = solve_symmetric(N, 10);
    const auto expect = series_phi(N, N, s.L);
    for (int n = 0; n <= 10; ++n) {
      std::vector<LaurentPoly::Term> terms;
      for (const auto &[k, c] : s.L[n].terms()) {
        CycloInt sum(ring, Integer(0));
        for (long j = 0; j < N; ++j)
          sum += CycloInt::omega_power(ring, j * k.get_si());
        ASSERT_TRUE(sum.is_rational());
        terms.emplace_back(k, c * sum.rational_part());
      }
      EXPECT_EQ(LaurentPoly::from_terms(std::move(terms)),
                Integer(N) * expect[n])
          << "N=" << N << " n=" << n;
    }
  }
}

TEST(BuildL0, DegreeInL0) {
  EXPECT_EQ(build_L0_poly(1).degree(0), 2);
  for (long N = 2; N <= 5; ++N)
    EXPECT_EQ(build_L0_poly(N).degree(0), N + 1) << "N=" << N;
}

TEST(BuildL0, CapNeedsFlag) {
  EXPECT_THROW(build_L0_poly(kDefaultMaxConstructionN + 1), InvalidArgument);
  EXPECT_THROW(build_L0_poly(0), InvalidArgument);
}

TEST(BuildG, MatchesReferenceEquations) {
  for (int N = 2; N <= 5; ++N)
    EXPECT_EQ(build_G_poly(N), canonical_form(reference_poly(N))) << "N=" << N;
}

TEST(BuildG, ReferenceEquationsAreAlreadyCanonical) {
  for (int N = 2; N <= 5; ++N)
    EXPECT_EQ(canonical_form(reference_poly(N)), reference_poly(N)) << "N=" << N;
}

TEST(BuildG, EquationForBS22) {
  EXPECT_EQ(to_canonical_text(build_G_poly(2)),
            "1 + 3*G*z*Q - 1*G^2 + 4*G^2*z^2 + 1*G^2*z^2*Q^2 - 1*G^3*z*Q + "
            "2*G^3*z^2*Q^2 + 4*G^3*z^3*Q - 1*G^3*z^3*Q^3");
}

TEST(BuildG, DegreeExactlyNPlusOne) {
  for (long N = 1; N <= 6; ++N)
    EXPECT_EQ(build_G_poly(N).degree(0), N + 1) << "N=" << N;
}

TEST(BuildG, FreeAbelianQuadratic) {
  const auto P = build_G_poly(1);
  EXPECT_EQ(P, canonical_form(parse_polynomial(
                   "1 - G^2*(1 - 2*z*Q - 4*z^2 + z^2*Q^2)", kGzQ)));
  const auto s = solve_symmetric(1, 20);
  EXPECT_TRUE(verify_series(P, s.G, Rational(1), 20).ok);
}

TEST(VerifySeries, ConstructedEquationsSymbolic) {
  for (long N = 1; N <= 5; ++N) {
    const auto s = solve_symmetric(N, 16);
    const auto v = verify_series(build_G_poly(N), s.G, SymbolicQ{}, 16);
    EXPECT_TRUE(v.ok) << "N=" << N;
    EXPECT_EQ(v.first_failing_degree, -1);
  }
}

TEST(VerifySeries, ReferenceBS22Symbolic) {
  EXPECT_TRUE(
      verify_series(reference_poly(2), solve_symmetric(2, 20).G, SymbolicQ{}, 20).ok);
}

TEST(VerifySeries, ReferenceBS55AtQEqualsOne) {
  EXPECT_TRUE(
      verify_series(reference_poly(5), solve_symmetric(5, 20).G, Rational(1), 20).ok);
}

TEST(VerifySeries, WrongGroupFails) {
  const auto v =
      verify_series(reference_poly(2), solve_symmetric(3, 10).G, SymbolicQ{}, 10);
  EXPECT_FALSE(v.ok);
  EXPECT_GT(v.first_failing_degree, 0);
}

TEST(VerifySeries, RationalQValues) {
  const auto s = solve_symmetric(3, 12);
  for (const Rational &q : {Rational(2), Rational(1, 3), Rational(-5, 2)})
    EXPECT_TRUE(verify_series(build_G_poly(3), s.G, q, 12).ok);
}

TEST(RewriteInQ, ChebyshevBasis) {
  // q^3 + q^-3 = Q^3 - 3Q
  EXPECT_EQ(symmetric_to_Q(lp({{3, 1}, {-3, 1}})), zp({0, -3, 0, 1}));
  EXPECT_EQ(symmetric_to_Q(lp({{2, 1}, {0, 2}, {-2, 1}})), zp({0, 0, 1}));
  EXPECT_THROW(symmetric_to_Q(lp({{1, 1}})), InternalError);
}

TEST(CanonicalForm, ContentMonomialAndSign) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(canonical_form(parse_polynomial("-6*x^2*y - 4*x^3*y", v)),
            parse_polynomial("3 + 2*x", v));
  EXPECT_EQ(canonical_form(parse_polynomial("-2 + 4*x", v)),
            parse_polynomial("1 - 2*x", v));
}

TEST(ParsePolynomial, GrammarAndErrors) {
  const std::vector<std::string> v{"x", "y"};
  EXPECT_EQ(parse_polynomial("(x + y)^2", v),
            parse_polynomial("x^2 + 2*x*y + y^2", v));
  EXPECT_EQ(parse_polynomial("-(x - 1)*(x + 1)", v),
            parse_polynomial("1 - x^2", v));
  EXPECT_THROW(parse_polynomial("3x", v), InvalidArgument);
  EXPECT_THROW(parse_polynomial("x + w", v), InvalidArgument);
  EXPECT_THROW(parse_polynomial("(x + 1", v), InvalidArgument);
  EXPECT_THROW(parse_polynomial("(x + 1)^-1", v), InvalidArgument);
  EXPECT_EQ(parse_polynomial("x^-1", v).degree(0), -1);
}

TEST(CanonicalText, RoundTrip) {
  for (int N = 2; N <= 5; ++N) {
    const auto P = build_G_poly(N);
    EXPECT_EQ(parse_polynomial(to_canonical_text(P), kGzQ), P);
  }
}

TEST(SpecializeQ, FreeAbelianAtQEqualsTwo) {
  // 1 - G^2 (1 - 4z) at Q = 2
  const auto c = specialize_Q(build_G_poly(1), Integer(2));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], zp({1}));
  EXPECT_TRUE(c[1].is_zero());
  EXPECT_EQ(c[2], zp({-1, 4}));
}
