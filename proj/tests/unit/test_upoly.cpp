#include "cogrowth/error.hpp"
#include "cogrowth/upoly.hpp"

#include <gtest/gtest.h>

using namespace cogrowth;

namespace {

ZPoly zp(std::initializer_list<long> low_first) {
  return ZPoly(std::vector<Integer>(low_first.begin(), low_first.end()));
}

} // namespace

TEST(UPoly, ArithmeticAndDerivative) {
  const ZPoly a = zp({1, 2}), b = zp({-1, 0, 3});
  EXPECT_EQ(a * b, zp({-1, -2, 3, 6}));
  EXPECT_EQ(a - a, ZPoly());
  EXPECT_EQ(b.derivative(), zp({0, 6}));
  EXPECT_EQ(b.eval(Integer(2)), 11);
  EXPECT_EQ(b.to_string("z"), "3*z^2 - 1");
}

TEST(UPoly, DivisionWithRemainder) {
  const auto [q, r] = divrem(zp({-1, 0, 0, 1}), zp({-1, 1}));
  EXPECT_EQ(q, zp({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_THROW(divrem(zp({1, 1}), ZPoly()), InvalidArgument);
  EXPECT_THROW(divrem(zp({1, 0, 1}), zp({1, 2})), InvalidArgument);
}

TEST(UPoly, GcdAndSquareFreePart) {
  const ZPoly f = zp({-1, 1}) * zp({-1, 1}) * zp({2, 1});
  EXPECT_EQ(square_free_part(f), zp({-2, 1, 1}));
  const QPoly g = gcd(to_rational(f), to_rational(zp({-1, 1}) * zp({5, 1})));
  EXPECT_EQ(g, to_rational(zp({-1, 1})));
  EXPECT_EQ(content(zp({6, -9, 12})), 3);
  EXPECT_EQ(primitive_part(zp({6, -9, 12})), zp({2, -3, 4}));
}

TEST(Resultant, KnownValues) {
  // Res(x^2 - 2, x - 1) = (1)^2 - 2 = -1 (up to the standard sign).
  EXPECT_EQ(abs(resultant(zp({-2, 0, 1}), zp({-1, 1}))), 1);
  // Discriminant-style: Res(x^2 + b x + c, 2x + b) = -(b^2 - 4c) * 1.
  EXPECT_EQ(abs(resultant(zp({3, 5, 1}), zp({5, 2}))), 25 - 12);
  // Common root gives zero.
  EXPECT_EQ(resultant(zp({-1, 0, 1}), zp({1, 1})), 0);
}

TEST(Resultant, Bareiss) {
  EXPECT_EQ(bareiss_determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 2 * (3 - 2) + 1 * (1 - 3));
  EXPECT_EQ(bareiss_determinant({{0, 1}, {1, 0}}), -1);
}

TEST(Resultant, OverZMatchesPointwise) {
  // P(G) = 1 - (1 - 4z) G^2, P'(G) = -2(1-4z) G.
  const std::vector<ZPoly> p{zp({1}), ZPoly(), zp({-1, 4})};
  const std::vector<ZPoly> dp{ZPoly(), zp({2, -8})};
  const ZPoly r = resultant_over_z(p, dp);
  for (long z = -3; z <= 3; ++z) {
    std::vector<Integer> pc, dc;
    for (const auto &c : p)
      pc.push_back(c.eval(Integer(z)));
    for (const auto &c : dp)
      dc.push_back(c.eval(Integer(z)));
    EXPECT_EQ(r.eval(Integer(z)), resultant(ZPoly(pc), ZPoly(dc)))
        << "z=" << z;
  }
}

TEST(Sturm, CountsAndIsolates) {
  const ZPoly f = zp({-2, 0, 1}) * zp({-1, 3}); // roots +-sqrt2, 1/3
  const SturmSequence s(f);
  EXPECT_EQ(s.count_roots(Rational(-10), Rational(10)), 3);
  EXPECT_EQ(s.count_roots(Rational(0), Rational(1)), 1);
  const auto roots =
      isolate_real_roots(f, Rational(0), Rational(2), Rational(1, 1000000));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].lo, Rational(1, 3));
  EXPECT_EQ(roots[0].hi, Rational(1, 3));
  EXPECT_LE(roots[1].lo * roots[1].lo, 2);
  EXPECT_GE(roots[1].hi * roots[1].hi, 2);
  EXPECT_LE(roots[1].hi - roots[1].lo, Rational(1, 1000000));
}
