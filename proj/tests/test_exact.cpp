#include <random>
#include <thread>
#include <unordered_set>

#include <gtest/gtest.h>

#include <rrkernel/exact.hpp>

using rrkernel::Rational;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2.
std::vector<Rational> akiyama_tanigawa(int count) {
  std::vector<Rational> out, a(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

} // namespace

TEST(Rational, CanonicalStrings) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_EQ(Rational::parse("-12/18").str(), "-2/3");
  EXPECT_EQ(Rational::parse("42"), Rational(42));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), std::exception);
  EXPECT_THROW(Rational::parse(""), std::exception);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int t = 0; t < 300; ++t) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(7, 3), Rational(2));
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(-2).pow(0), Rational(1));
}

TEST(Rational, HashAgreesWithEquality) {
  std::unordered_set<Rational> s{Rational(1, 2), Rational(2, 4), Rational(3)};
  EXPECT_EQ(s.size(), 2u);
}

TEST(Combinatorics, GeneralizedBinomial) {
  EXPECT_EQ(rrkernel::binomial(5, 2), Rational(10));
  EXPECT_EQ(rrkernel::binomial(2, 5), Rational(0));
  EXPECT_EQ(rrkernel::binomial(-1, 3), Rational(-1));
  EXPECT_EQ(rrkernel::binomial(-2, 2), Rational(3));
  EXPECT_EQ(rrkernel::binomial(7, 0), Rational(1));
  EXPECT_THROW(rrkernel::binomial(3, -1), std::domain_error);
}

TEST(Combinatorics, PascalRuleIncludingNegativeTop) {
  for (long n = -8; n <= 8; ++n)
    for (long k = 1; k <= 8; ++k)
      EXPECT_EQ(rrkernel::binomial(n, k), rrkernel::binomial(n - 1, k) + rrkernel::binomial(n - 1, k - 1));
}

TEST(Combinatorics, ZeroToTheZeroIsOne) {
  EXPECT_EQ(rrkernel::power_zero_convention(0, 0), Rational(1));
  EXPECT_EQ(rrkernel::power_zero_convention(0, 3), Rational(0));
  EXPECT_EQ(rrkernel::power_zero_convention(-2, 3), Rational(-8));
}

TEST(Combinatorics, Harmonic) {
  EXPECT_EQ(rrkernel::harmonic(1), Rational(1));
  EXPECT_EQ(rrkernel::harmonic(4), Rational(25, 12));
  EXPECT_THROW(rrkernel::harmonic(0), std::domain_error);
}

TEST(Combinatorics, Factorial) {
  EXPECT_EQ(rrkernel::factorial(0), 1);
  EXPECT_EQ(rrkernel::factorial(10), 3628800);
  EXPECT_THROW(rrkernel::factorial(-1), std::domain_error);
}

TEST(Bernoulli, FrozenValues) {
  const char* expected[] = {"1", "1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66", "0", "-691/2730",
                            "0", "7/6"};
  for (int m = 0; m < 15; ++m) EXPECT_EQ(rrkernel::bernoulli(m).str(), expected[m]) << "m=" << m;
  EXPECT_EQ(rrkernel::bernoulli(20), Rational(-174611, 330));
}

TEST(Bernoulli, MatchesAkiyamaTanigawa) {
  auto oracle = akiyama_tanigawa(40);
  for (int m = 0; m < 40; ++m) EXPECT_EQ(rrkernel::bernoulli(m), oracle[m]) << "m=" << m;
}

TEST(Bernoulli, OddVanishBeyondOne) {
  for (int m = 3; m < 41; m += 2) EXPECT_TRUE(rrkernel::bernoulli(m).is_zero());
}

TEST(Bernoulli, NegativeIndexThrows) {
  EXPECT_THROW(rrkernel::bernoulli(-1), std::domain_error);
}

TEST(Bernoulli, ConcurrentExtensionIsConsistent) {
  rrkernel::BernoulliTable table;
  std::vector<std::thread> threads;
  std::vector<Rational> seen(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] { seen[t] = table.get(static_cast<std::size_t>(10 + 4 * t)); });
  for (auto& th : threads) th.join();
  auto oracle = akiyama_tanigawa(40);
  for (int t = 0; t < 8; ++t) EXPECT_EQ(seen[t], oracle[10 + 4 * t]);
  EXPECT_EQ(table.prefix(5).size(), 5u);
}
