#include <random>

#include <gtest/gtest.h>

#include <rrkernel/combin.hpp>

using rrkernel::QMatrix;
using rrkernel::Rational;

namespace {

QMatrix from_rows(std::vector<std::vector<Rational>> rows) {
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Rational superfactorial(long n) {
  Rational p(1);
  for (long k = 0; k <= n; ++k) p *= Rational(rrkernel::factorial(k));
  return p;
}

} // namespace

TEST(Vandermonde, ZeroToTheZeroEntry) {
  auto v = rrkernel::vandermonde(2);
  EXPECT_EQ(v(0, 0), Rational(1));
  EXPECT_EQ(v(0, 1), Rational(0));
  EXPECT_EQ(v(2, 2), Rational(4));
}

TEST(Vandermonde, InverseSmallCases) {
  EXPECT_EQ(rrkernel::inverse_vandermonde(0), from_rows({{1}}));
  EXPECT_EQ(rrkernel::inverse_vandermonde(1), from_rows({{1, 0}, {-1, 1}}));
  EXPECT_EQ(rrkernel::inverse_vandermonde(2),
            from_rows({{1, 0, 0}, {Rational(-3, 2), 2, Rational(-1, 2)}, {Rational(1, 2), -1, Rational(1, 2)}}));
}

TEST(Vandermonde, RowOneOfA3) {
  const auto& a = rrkernel::inverse_vandermonde(3);
  EXPECT_EQ(a(1, 0), Rational(-11, 6));
  EXPECT_EQ(a(1, 1), Rational(3));
  EXPECT_EQ(a(1, 2), Rational(-3, 2));
  EXPECT_EQ(a(1, 3), Rational(1, 3));
}

TEST(Vandermonde, InverseIsTwoSided) {
  for (long n = 0; n <= 12; ++n) {
    auto v = rrkernel::vandermonde(n);
    const auto& a = rrkernel::inverse_vandermonde(n);
    EXPECT_EQ(v * a, QMatrix::identity(n + 1));
    EXPECT_EQ(a * v, QMatrix::identity(n + 1));
  }
}

TEST(Vandermonde, DeterminantIsSuperfactorial) {
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(rrkernel::vandermonde(n).determinant(), superfactorial(n)) << n;
}

TEST(Vandermonde, LastRowIsFiniteDifference) {
  for (long n = 0; n <= 10; ++n) {
    const auto& a = rrkernel::inverse_vandermonde(n);
    for (long k = 0; k <= n; ++k)
      EXPECT_EQ(a(n, k), Rational((n - k) % 2 == 0 ? 1 : -1) * rrkernel::binomial(n, k) /
                             Rational(rrkernel::factorial(n)));
  }
}

TEST(Vandermonde, CacheReturnsSameObject) {
  EXPECT_EQ(&rrkernel::inverse_vandermonde(5), &rrkernel::inverse_vandermonde(5));
}

TEST(Vandermonde, SingularInverseThrows) {
  QMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_THROW(m.inverse(), std::exception);
}

TEST(ApplyA, RecoversPolynomialCoefficients) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (long n = 0; n <= 8; ++n)
    for (int t = 0; t < 5; ++t) {
      std::vector<Rational> poly;
      for (long j = 0; j <= n; ++j) poly.emplace_back(coef(rng), 1 + (coef(rng) + 9) % 4);
      std::vector<Rational> samples;
      for (long k = 0; k <= n; ++k) {
        Rational v;
        for (long j = n; j >= 0; --j) v = v * Rational(k) + poly[j];
        samples.push_back(v);
      }
      for (long j = 0; j <= n; ++j) EXPECT_EQ(rrkernel::apply_A_to_samples(n, j, samples), poly[j]);
    }
}

TEST(ApplyA, BadArguments) {
  std::vector<Rational> s(3);
  EXPECT_THROW(rrkernel::apply_A_to_samples(2, 3, s), std::domain_error);
  EXPECT_THROW(rrkernel::apply_A_to_samples(3, 0, s), std::invalid_argument);
}

TEST(Interp, EvaluatesBinomialPolynomial) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  for (long b = 0; b <= 10; ++b) {
    auto c = rrkernel::interp_coeffs(b);
    ASSERT_EQ(c.values.size(), static_cast<std::size_t>(b + 1));
    for (int t = 0; t < 10; ++t) {
      Rational x(num(rng), den(rng));
      Rational direct(1);
      for (long k = 0; k < b; ++k) direct *= (x - Rational(k)) / Rational(k + 1);
      EXPECT_EQ(c.evaluate(x), direct);
    }
  }
}

TEST(Interp, FrozenB2) {
  auto c = rrkernel::interp_coeffs(2);
  EXPECT_EQ(c.values[0], Rational(0));
  EXPECT_EQ(c.values[1], Rational(-1, 2));
  EXPECT_EQ(c.values[2], Rational(1, 2));
}

TEST(Interp, DisplayedFormDisagreesAtTwoOne) {
  auto d = rrkernel::interp_diagnostic(2, 1);
  EXPECT_EQ(d.interpolation_value, Rational(-1, 2));
  ASSERT_TRUE(d.displayed_value.has_value());
  EXPECT_EQ(*d.displayed_value, Rational(1, 2));
  EXPECT_FALSE(d.agree());
  EXPECT_FALSE(rrkernel::displayed_interp_coeff(0, 0).has_value());
}

TEST(PowerSum, FrozenValues) {
  EXPECT_EQ(rrkernel::power_sum(0, 0), Rational(0));
  EXPECT_EQ(rrkernel::power_sum(0, 5), Rational(5));
  EXPECT_EQ(rrkernel::power_sum(1, 100), Rational(5050));
  EXPECT_EQ(rrkernel::power_sum(2, 10), Rational(385));
  EXPECT_EQ(rrkernel::power_sum(3, 10), Rational(3025));
  EXPECT_THROW(rrkernel::power_sum(-1, 3), std::domain_error);
}

TEST(PartialPolarization, Passes) {
  for (long n = 1; n <= 6; ++n) EXPECT_TRUE(rrkernel::partial_polarization_check(n).passed) << n;
}
