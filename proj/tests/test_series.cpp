#include <random>

#include <gtest/gtest.h>

#include <rrkernel/series.hpp>

using rrkernel::Rational;
using rrkernel::Series;

namespace {

Series random_series(std::mt19937& rng, long order, bool unit) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  Series s(order);
  for (long k = 0; k <= order; ++k) s.set(k, Rational(num(rng), den(rng)));
  if (unit && s[0].is_zero()) s.set(0, Rational(1));
  return s;
}

// (e^u - 1)/u = sum u^k/(k+1)!, inverted by long division. Independent of
// the Bernoulli table.
Series u_over_expm1(long order) {
  Series f(order);
  for (long k = 0; k <= order; ++k) f.set(k, Rational(mpz_class(1), rrkernel::factorial(k + 1)));
  return f.inverse();
}

} // namespace

TEST(Series, ToddCoefficients) {
  auto td = rrkernel::todd_series(6);
  EXPECT_EQ(td[0], Rational(1));
  EXPECT_EQ(td[1], Rational(1, 2));
  EXPECT_EQ(td[2], Rational(1, 12));
  EXPECT_EQ(td[3], Rational(0));
  EXPECT_EQ(td[4], Rational(-1, 720));
  EXPECT_EQ(td[6], Rational(1, 30240));
}

TEST(Series, ToddIsXOverOneMinusExpMinusX) {
  // (1 - e^{-x})/x = sum (-1)^k x^k/(k+1)!
  Series g(20);
  for (long k = 0; k <= 20; ++k)
    g.set(k, Rational(k % 2 == 0 ? 1 : -1) / Rational(rrkernel::factorial(k + 1)));
  EXPECT_EQ(rrkernel::todd_series(20), g.inverse());
}

TEST(Series, ExpSeries) {
  auto e = rrkernel::exp_series(Rational(2), 4);
  EXPECT_EQ(e[3], Rational(8, 6));
  EXPECT_EQ(rrkernel::exp_series(Rational(1), 8) * rrkernel::exp_series(Rational(-1), 8),
            Series::constant(Rational(1), 8));
}

TEST(Series, InverseProperty) {
  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto f = random_series(rng, 8, true);
    EXPECT_EQ(f * f.inverse(), Series::constant(Rational(1), 8));
  }
  EXPECT_THROW(Series::monomial(Rational(1), 1, 4).inverse(), std::domain_error);
}

TEST(Series, RingLaws) {
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    auto a = random_series(rng, 6, false), b = random_series(rng, 6, false), c = random_series(rng, 6, false);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.pow(3), a * a * a);
  }
}

TEST(Series, NegativePower) {
  auto td = rrkernel::todd_series(6);
  EXPECT_EQ(td.pow(-2) * td.pow(2), Series::constant(Rational(1), 6));
}

TEST(Series, TruncatesToSmallerOrder) {
  EXPECT_EQ((rrkernel::todd_series(3) * rrkernel::todd_series(7)).order(), 3);
}

TEST(Series, ScaledSubstitution) {
  auto td = rrkernel::todd_series(5).scaled(Rational(2));
  EXPECT_EQ(td[1], Rational(1));
  EXPECT_EQ(td[2], Rational(1, 3));
}

TEST(Zeta, ValuesAtNegativeIntegers) {
  EXPECT_EQ(rrkernel::zeta_at_negative(1), Rational(-1, 12));
  EXPECT_EQ(rrkernel::zeta_at_negative(3), Rational(1, 120));
  EXPECT_EQ(rrkernel::zeta_at_negative(2), Rational(0));
}

TEST(RGenus, RationalPartsAndAtoms) {
  auto r = rrkernel::r_genus(5);
  EXPECT_EQ(r.rational_part[1], Rational(-1, 12));
  // H_3 zeta(-3) / 3! = (11/6)(1/120)/6
  EXPECT_EQ(r.rational_part[3], Rational(11, 4320));
  for (long k = 0; k <= 5; k += 2) EXPECT_TRUE(r.rational_part[k].is_zero());
  auto [rat, atoms] = r.coefficient(3);
  EXPECT_EQ(rat, Rational(11, 4320));
  ASSERT_EQ(atoms.size(), 1u);
  EXPECT_EQ(atoms.at(3), Rational(1, 3));
  EXPECT_EQ(r.zeta_prime_parts.size(), 3u);
}

TEST(RGenus, AtomIndicesMustBeOdd) {
  rrkernel::ZetaSeries z(4);
  EXPECT_THROW(z.add_atom(2, Series(4)), std::domain_error);
  EXPECT_THROW(z.add_atom(0, Series(4)), std::domain_error);
}

TEST(RGenus, NumericHookSubstitutesTable) {
  auto r = rrkernel::r_genus(3);
  auto v = r.evaluate_numeric({{1, 0.5}});
  EXPECT_NEAR(v[1], -1.0 / 12 + 2 * 0.5, 1e-15);
  EXPECT_NEAR(v[3], 11.0 / 4320, 1e-15);
}

TEST(GsConstants, ItemThreeAtOne) {
  auto c = rrkernel::gs_constant_item3(1);
  EXPECT_EQ(c.harmonic_part, Rational(5, 12));
  EXPECT_EQ(c.integral_part, Rational(-1, 12));
}

TEST(GsConstants, IntegralPartAgainstIndependentInversion) {
  for (long n = 1; n <= 8; ++n) {
    // 1/u - 1/(e^u - 1) = (1 - u/(e^u - 1))/u; drop the constant, integrate t^{m-1} over [0, 1].
    Series q = u_over_expm1(n + 1);
    Series kernel(n);
    for (long m = 1; m <= n; ++m) kernel.set(m, -q[m + 1] / Rational(m));
    Series td = rrkernel::todd_series(n).pow(n + 1);
    EXPECT_EQ(rrkernel::gs_constant_item3(n).integral_part, (kernel * td)[n]) << "n=" << n;
  }
}

TEST(GsConstants, HarmonicPartIsHarmonicSumTimesToddPower) {
  for (long n = 1; n <= 6; ++n) {
    Rational hsum;
    for (long i = 1; i <= n; ++i)
      for (long k = 1; k <= i; ++k) hsum += Rational(1, k);
    EXPECT_EQ(rrkernel::gs_constant_item3(n).harmonic_part,
              hsum * rrkernel::todd_series(n + 1).pow(n + 1)[n + 1]);
  }
}

TEST(GsConstants, ItemTwoAtOne) {
  auto [rat, atoms] = rrkernel::gs_constant_item2(1);
  EXPECT_EQ(rat, Rational(-1, 6));
  ASSERT_EQ(atoms.size(), 1u);
  EXPECT_EQ(atoms.at(1), Rational(4));
}

TEST(GsConstants, RejectsNonPositive) {
  EXPECT_THROW(rrkernel::gs_constant_item3(0), std::domain_error);
  EXPECT_THROW(rrkernel::gs_constant_item2(0), std::domain_error);
}
