#include <random>

#include <gtest/gtest.h>

#include <rrkernel/spaces.hpp>

using namespace rrkernel;

namespace {

// h^0 of O(d) on P^n by counting monomials; h^n by Serre duality.
Rational chi_by_counting(long n, long d) {
  auto monomials = [n](long deg) -> long {
    if (deg < 0) return 0;
    std::vector<long> ways(static_cast<std::size_t>(deg + 1), 0);
    ways[0] = 1;
    for (long var = 0; var <= n; ++var)
      for (long s = 1; s <= deg; ++s) ways[s] += ways[s - 1];
    return ways[deg];
  };
  long h0 = monomials(d);
  long hn = monomials(-d - n - 1);
  return Rational(h0 + (n % 2 == 0 ? hn : -hn));
}

} // namespace

TEST(Spaces, Dimensions) {
  EXPECT_EQ(ModelSpace::projective(3).dimension(), 3);
  EXPECT_EQ(ModelSpace::product({2, 1}).dimension(), 3);
  EXPECT_EQ(ModelSpace::hypersurface(3, 2).dimension(), 2);
  EXPECT_THROW(ModelSpace::projective(-1), std::domain_error);
  EXPECT_THROW(ModelSpace::hypersurface(0, 1), std::domain_error);
  EXPECT_THROW(ModelSpace::hypersurface(2, 0), std::domain_error);
  EXPECT_THROW(ModelSpace::product({}), std::invalid_argument);
}

TEST(Spaces, IntegrationPicksTopDegree) {
  auto p2 = ModelSpace::projective(2);
  auto h = p2.ring()->gen("h");
  EXPECT_EQ(p2.integrate(h * h), Rational(1));
  EXPECT_EQ(p2.integrate(h), Rational(0));
  auto cubic = ModelSpace::hypersurface(3, 3);
  EXPECT_EQ(cubic.integrate(cubic.ring()->gen("h").pow(2)), Rational(3));
}

TEST(Spaces, TwistArity) {
  auto p = ModelSpace::product({1, 1});
  std::vector<long> one{1};
  EXPECT_THROW(p.twist_class(one), std::invalid_argument);
}

TEST(Hrr, PinnedP2O3) {
  std::vector<long> t{3};
  auto rep = hrr_check(ModelSpace::projective(2), t);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.lhs, "10");
  EXPECT_EQ(rep.rhs, "10");
}

TEST(Hrr, ConicWithO1) {
  std::vector<long> t{1};
  auto rep = hrr_check(ModelSpace::hypersurface(2, 2), t);
  EXPECT_EQ(rep.lhs, "3");
  EXPECT_TRUE(rep.passed);
}

TEST(Hrr, ProjectiveOracleAgreesWithMonomialCount) {
  for (long n = 0; n <= 5; ++n)
    for (long d = -8; d <= 8; ++d) EXPECT_EQ(euler_characteristic_projective(n, d), chi_by_counting(n, d));
}

TEST(Hrr, ProjectiveSweep) {
  for (int n = 0; n <= 5; ++n)
    for (long d = -7; d <= 7; ++d) {
      std::vector<long> t{d};
      EXPECT_TRUE(hrr_check(ModelSpace::projective(n), t).passed) << n << " " << d;
    }
}

TEST(Hrr, RandomProducts) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> dim(0, 2);
  std::uniform_int_distribution<long> tw(-5, 5);
  for (int t = 0; t < 40; ++t) {
    std::vector<int> dims{dim(rng) + 1, dim(rng), dim(rng)};
    auto space = ModelSpace::product(dims);
    std::vector<long> twist{tw(rng), tw(rng), tw(rng)};
    auto rep = hrr_check(space, twist);
    EXPECT_TRUE(rep.passed) << space.name() << " " << rep.lhs << " vs " << rep.rhs;
  }
}

TEST(Hrr, HypersurfaceGenus) {
  // Plane curve of degree k: chi(O) = 1 - g = 1 - (k-1)(k-2)/2.
  for (int k = 1; k <= 6; ++k) {
    std::vector<long> t{0};
    auto space = ModelSpace::hypersurface(2, k);
    Rational chi = space.integrate(tangent_todd(space));
    EXPECT_EQ(chi, Rational(1) - Rational((k - 1) * (k - 2), 2));
    EXPECT_TRUE(hrr_check(space, t).passed);
  }
  // Quartic surface: chi(O) = 2.
  auto k3 = ModelSpace::hypersurface(3, 4);
  EXPECT_EQ(k3.integrate(tangent_todd(k3)), Rational(2));
}

TEST(Pairing, Examples) {
  auto p2 = ModelSpace::projective(2);
  EXPECT_EQ(pairing_degree(p2, {{1}, {1}}), Rational(1));
  EXPECT_EQ(pairing_degree(p2, {{2}, {3}}), Rational(6));
  auto p1p1 = ModelSpace::product({1, 1});
  EXPECT_EQ(pairing_degree(p1p1, {{1, 0}, {0, 1}}), Rational(1));
  EXPECT_EQ(pairing_degree(p1p1, {{1, 1}, {1, 1}}), Rational(2));
  EXPECT_EQ(pairing_degree(p1p1, {{1, 0}, {1, 0}}), Rational(0));
  EXPECT_THROW(pairing_degree(p2, {{1}}), std::domain_error);
}

TEST(Pairing, Multilinear) {
  auto p3 = ModelSpace::projective(3);
  EXPECT_EQ(pairing_degree(p3, {{2}, {3}, {5}}), Rational(30));
  auto fam = ModelSpace::product({2, 1});
  EXPECT_EQ(pairing_degree(fam, {{1, 1}, {1, 1}, {1, 1}}), Rational(3));
}

TEST(Pairing, SymmetricAndMultilinearOnRandomTwists) {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> tw(-4, 4);
  auto space = ModelSpace::product({2, 1});
  auto rand_twist = [&] { return std::vector<long>{tw(rng), tw(rng)}; };
  for (int t = 0; t < 30; ++t) {
    auto a = rand_twist(), b = rand_twist(), c = rand_twist(), c2 = rand_twist();
    Rational abc = pairing_degree(space, {a, b, c});
    EXPECT_EQ(abc, pairing_degree(space, {c, a, b}));
    EXPECT_EQ(abc, pairing_degree(space, {b, c, a}));
    std::vector<long> sum{c[0] + c2[0], c[1] + c2[1]};
    EXPECT_EQ(pairing_degree(space, {a, b, sum}), abc + pairing_degree(space, {a, b, c2}));
  }
}

TEST(Family, LambdaDegree) {
  EXPECT_EQ(lambda_family_degree(2, 1, 1), Rational(3));
  EXPECT_EQ(lambda_family_degree(2, 2, -1), Rational(-6));
  EXPECT_EQ(lambda_family_degree(3, 0, 4), Rational(4));
  EXPECT_THROW(lambda_family_degree(2, -1, 0), std::domain_error);
}

// deg det R pi_* O(a,b) via Grothendieck-Riemann-Roch on P^n x P^1.
TEST(Family, LambdaDegreeMatchesGrr) {
  for (int n = 1; n <= 4; ++n) {
    auto fam = ModelSpace::product({n, 1});
    for (long a = 0; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        std::vector<long> t{a, b};
        auto h = fam.ring()->gen("h1");
        auto td_rel = h.substitute_into(todd_series(fam.ring()->cap())).pow(n + 1);
        auto ch = fam.twist_class(t).substitute_into(exp_series(Rational(1), fam.ring()->cap()));
        // Push forward to P^1 and take degree: the top-degree integral of Td_rel * ch.
        EXPECT_EQ(fam.integrate(td_rel * ch), lambda_family_degree(n, a, b)) << n << a << b;
      }
  }
}
