// Battery of exact identities behind the inversion of the Riemann-Roch
// pairing: each check evaluates both sides independently and reports them.
#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "classes.hpp"
#include "combin.hpp"
#include "exact.hpp"
#include "report.hpp"
#include "series.hpp"
#include "spaces.hpp"

namespace rrkernel {

/// Identity id -> statement being checked.
inline const std::map<std::string, std::string>& battery_manifest() {
  static const std::map<std::string, std::string> manifest{
      {"PROP-VAND-DET", "det V^n = prod_{i<j} (j - i)"},
      {"PROP-VAND-ROW", "A^n_{n,k} = (-1)^{n-k} binom(n, k) / n!"},
      {"PROP-VAND-INV", "A^n V^n = V^n A^n = 1"},
      {"PROP-BINOM1", "(1/n!) sum_j binom(n, j) (-1)^{n-j} j^k in {0, 1, n(n+1)/2}"},
      {"PROP-A", "sum_k A^n_{j,k} binom(a k, b) = a^j B_{b,j}"},
      {"PROP-A-INTERP", "sum_j B_{b,j} m^j = binom(m, b)"},
      {"PROP-PARTPOL", "x y^n = (1/(n+1)) sum_j A^n_{n,j} (x + j y)^{n+1} - (n/2) y^{n+1}"},
      {"PROP-POWERSUM", "sum_{k<=n} k^p: direct sum against the Bernoulli closed form"},
      {"PROP-BERN-1", "sum_{k<=m} binom(m+1, k) B_k = m + 1"},
      {"PROP-BERN-2", "sum_{k<=m} (-1)^k binom(m+1, k) B_k = delta_{m,0}"},
      {"PROP-BERN-3", "1 - sum_{k<m} binom(m, k) B_k / (m-k+1) = B_m"},
      {"PROP-BERN-COLLAPSE", "(a+1) B_a = sum_j binom(a+1, j) B_j (a+1-j) (-1)^j"},
      {"TODD-BERNOULLI", "[x^k] x/(1 - e^{-x}) = B_k / k!"},
      {"HRR-PROJ", "int Td ch(O(d)) = chi(P^n, O(d))"},
      {"HRR-PRODUCT", "int Td ch = chi on products of projective spaces"},
      {"HRR-HYPERSURFACE", "int Td ch = chi on hypersurfaces, Td(T) = Td(T_P)/Td(O(k))"},
      {"LAMBDA-RELATION", "sum_i c_i chi(P^n, O(i d)) = 0 when sum_i c_i binom(i, j) = 0 for j <= n+1"},
      {"EQ-REDUCTIONDRR", "Td^{n+1-i} x^i = i! sum_j A^{n+1}_{i,j} [Td e^{jx}]_{n+1}, symbolic"},
      {"EQ-REDUCTIONDRR-FAMILY", "the same reduction as degrees on P^n x P^1"},
      {"EQ-POLCOLLAPSE", "polarization collapse: sum_j A^{i-1}_{i-1,j} (...) = (i(i+1)/2) sum_k A^{n+1}_{i,k} binom(k, l)"},
      {"EQ-TEMP4", "alternating sum / (i-1)! = (i(i-1)/2) sum_k A^{n+1}_{i,k} binom(k, r)"},
      {"EQ-TEMP3-FAMILY", "divisor lambda combination vanishes, composite degree shadow on P^n x P^1"},
      {"EQ-TEMP1", "alternating sum = ((i-1)/2) i! sum_k A^{n+1}_{i,k} binom(k, b)"},
      {"EQ-VANISHING", "alternating j^b sums and A-row power-sum moments vanish below the diagonal"},
      {"EQ-EXPLICIT-FAMILY", "explicit formula, i-block degree equals <Td^{n+1-i} c_1(L)^i>/i! on P^n x P^1"},
      {"GS-ITEM3", "harmonic part of the projective-space constant = sum H_i [Td^{n+1}]_{n+1}"},
      {"FIBER-PUSHFORWARD", "push-forward of z^2 along z^2 - s equals 2s"},
      {"FIBER-MULTIPLICITY", "total multiplicity in a disk is constant over the parameter disk"},
      {"FIBER-CONTINUITY", "oscillation of the push-forward shrinks with the radius"},
  };
  return manifest;
}

namespace detail {

inline Rational sign_power(long e) { return Rational(e % 2 == 0 ? 1 : -1); }

/// sum_k A^{n}_{i,k} f(k) for k = 0..n.
template <typename F>
Rational apply_row(long n, long i, F&& f) {
  const QMatrix& a = inverse_vandermonde(n);
  Rational acc;
  for (long k = 0; k <= n; ++k)
    if (!a(i, k).is_zero()) acc += a(i, k) * f(k);
  return acc;
}

inline void check_range(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Combinatorial appendix.

inline IdentityReport check_vandermonde_determinant(long n) {
  Rational product(1);
  for (long i = 0; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) product *= Rational(j - i);
  return make_report("PROP-VAND-DET", {{"n", n}}, vandermonde(n).determinant(), product);
}

inline IdentityReport check_vandermonde_last_row(long n) {
  const QMatrix& a = inverse_vandermonde(n);
  std::vector<Rational> closed;
  for (long j = 0; j <= n; ++j)
    closed.push_back(binomial(n, j) * detail::sign_power(n - j) / Rational(factorial(n)));
  auto row = a.row(static_cast<std::size_t>(n));
  return make_report("PROP-VAND-ROW", {{"n", n}}, to_witness({row.begin(), row.end()}), to_witness(closed));
}

inline IdentityReport check_vandermonde_inverse(long n) {
  const QMatrix v = vandermonde(n);
  const QMatrix& a = inverse_vandermonde(n);
  const QMatrix id = QMatrix::identity(static_cast<std::size_t>(n + 1));
  std::string lhs = (a * v).str() + " ; " + (v * a).str();
  return make_report("PROP-VAND-INV", {{"n", n}}, lhs, id.str() + " ; " + id.str());
}

/// (1/n!) sum_j binom(n, j) (-1)^{n-j} j^k against its three-case value.
inline IdentityReport check_binom1(long n, long k) {
  detail::check_range(n >= 1 && k >= 0 && k <= n + 1, "check_binom1: need n >= 1, 0 <= k <= n+1");
  Rational sum;
  for (long j = 0; j <= n; ++j) sum += binomial(n, j) * detail::sign_power(n - j) * power_zero_convention(j, k);
  sum /= Rational(factorial(n));
  Rational expected = k == n + 1 ? Rational(n * (n + 1), 2) : (k == n ? Rational(1) : Rational(0));
  return make_report("PROP-BINOM1", {{"n", n}, {"k", k}}, sum, expected);
}

/// sum_k A^n_{j,k} binom(a k, b) = a^j B_{b,j}.
inline IdentityReport check_prop_A(long n, long a, long b, long j) {
  detail::check_range(b >= 0 && b <= n && j >= 0 && j <= n, "check_prop_A: need 0 <= b, j <= n");
  Rational lhs = detail::apply_row(n, j, [&](long k) { return binomial(a * k, b); });
  auto coeffs = interp_coeffs(b);
  Rational bj = j <= b ? coeffs.values[static_cast<std::size_t>(j)] : Rational(0);
  return make_report("PROP-A", {{"n", n}, {"a", a}, {"b", b}, {"j", j}}, lhs, Rational(a).pow(j) * bj);
}

/// sum_j B_{b,j} m^j = binom(m, b).
inline IdentityReport check_interp_evaluation(long b, long m) {
  return make_report("PROP-A-INTERP", {{"b", b}, {"m", m}}, interp_coeffs(b).evaluate(Rational(m)),
                     binomial(m, b));
}

/// Direct power sum against the Bernoulli closed form.
inline IdentityReport check_power_sum(long p, long n) {
  Rational direct;
  for (long k = 1; k <= n; ++k) direct += power_zero_convention(k, p);
  Rational closed;
  for (long j = 0; j <= p; ++j)
    closed += binomial(p + 1, j) * bernoulli(j) * power_zero_convention(n, p + 1 - j);
  closed /= Rational(p + 1);
  return make_report("PROP-POWERSUM", {{"p", p}, {"n", n}}, direct, closed);
}

/// The three Bernoulli recurrences; line is 1, 2 or 3.
inline IdentityReport check_bernoulli_recurrence(int line, long m) {
  Rational lhs;
  Rational rhs;
  switch (line) {
  case 1:
    for (long k = 0; k <= m; ++k) lhs += binomial(m + 1, k) * bernoulli(k);
    rhs = Rational(m + 1);
    break;
  case 2:
    for (long k = 0; k <= m; ++k) lhs += detail::sign_power(k) * binomial(m + 1, k) * bernoulli(k);
    rhs = Rational(m == 0 ? 1 : 0);
    break;
  case 3:
    detail::check_range(m >= 1, "check_bernoulli_recurrence: line 3 needs m >= 1");
    lhs = Rational(1);
    for (long k = 0; k <= m - 1; ++k) lhs -= binomial(m, k) * bernoulli(k) / Rational(m - k + 1);
    rhs = bernoulli(m);
    break;
  default:
    throw std::domain_error("check_bernoulli_recurrence: line must be 1, 2 or 3");
  }
  return make_report("PROP-BERN-" + std::to_string(line), {{"m", m}}, lhs, rhs);
}

/// (a+1) B_a = sum_j binom(a+1, j) B_j (a+1-j) (-1)^j.
inline IdentityReport check_bernoulli_collapse(long a) {
  detail::check_range(a >= 0, "check_bernoulli_collapse: a < 0");
  Rational rhs;
  for (long j = 0; j <= a; ++j)
    rhs += binomial(a + 1, j) * bernoulli(j) * Rational(a + 1 - j) * detail::sign_power(j);
  return make_report("PROP-BERN-COLLAPSE", {{"a", a}}, Rational(a + 1) * bernoulli(a), rhs);
}

inline IdentityReport check_todd_bernoulli(long k) {
  return make_report("TODD-BERNOULLI", {{"k", k}}, todd_series(k)[k],
                     bernoulli(k) / Rational(factorial(k)));
}

inline IdentityReport check_gs_item3_harmonic(long n) {
  // sum_{i<=n} H_i [Td^{n+1}]_{n+1}, with the power taken by repeated
  // Cauchy products rather than Series::pow.
  Series td = todd_series(n + 1);
  Series power = Series::constant(Rational(1), n + 1);
  for (long e = 0; e <= n; ++e) power = power * td;
  Rational h;
  for (long i = 1; i <= n; ++i) h += harmonic(i);
  return make_report("GS-ITEM3", {{"n", n}}, gs_constant_item3(n).harmonic_part, h * power[n + 1]);
}

// ---------------------------------------------------------------------------
// Lambda relations.

/// c_i = (-1)^i binom(order, i), i = 0..order: the order-th finite difference.
inline std::vector<long> finite_difference_vector(long order) {
  std::vector<long> c;
  for (long i = 0; i <= order; ++i) {
    Rational v = detail::sign_power(i) * binomial(order, i);
    c.push_back(std::stol(v.str()));
  }
  return c;
}

/// True iff sum_i c_i binom(i, j) = 0 for 0 <= j <= n+1.
inline bool satisfies_lambda_condition(long n, const std::vector<long>& c) {
  for (long j = 0; j <= n + 1; ++j) {
    Rational s;
    for (std::size_t i = 0; i < c.size(); ++i) s += Rational(c[i]) * binomial(static_cast<long>(i), j);
    if (!s.is_zero()) return false;
  }
  return true;
}

/// sum_i c_i chi(P^n, O(i d)) = 0 for coefficient vectors satisfying the
/// lambda condition.
inline IdentityReport check_lambda_relation(long n, const std::vector<long>& c, long d, long shift = 0) {
  if (!satisfies_lambda_condition(n, c))
    throw std::domain_error("check_lambda_relation: coefficients violate the lambda condition");
  Rational sum;
  for (std::size_t i = 0; i < c.size(); ++i)
    sum += Rational(c[i]) * euler_characteristic_projective(n, static_cast<long>(i) * d);
  return make_report("LAMBDA-RELATION",
                     {{"n", n}, {"d", d}, {"len", static_cast<long>(c.size())}, {"shift", shift}}, sum,
                     Rational(0));
}

// ---------------------------------------------------------------------------
// Reduction of the Riemann-Roch degree to pairings of Td^{n+1-i} c_1^i.

/// Td^{n+1-i}(T) x^i = i! sum_j A^{n+1}_{i,j} [Td(T) e^{jx}]_{n+1} in the
/// ring of Chern roots t_1..t_n of T and x = c_1(L), capped at n+1.
inline IdentityReport check_reductiondrr_symbolic(long n, long i) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1, "check_reductiondrr_symbolic: need n >= 1, 1 <= i <= n+1");
  std::vector<std::string> gens;
  std::vector<std::string> tangent_roots;
  for (long r = 1; r <= n; ++r) {
    gens.push_back("t" + std::to_string(r));
    tangent_roots.push_back(gens.back());
  }
  gens.push_back("x");
  auto ring = ClassRing::create(gens, static_cast<int>(n + 1));
  const FormalBundle tangent = FormalBundle::from_generators(ring, "T", tangent_roots);
  const ClassElement x = ring->gen("x");
  const ClassElement td = todd_class(ring, tangent);

  ClassElement lhs = td.graded_piece(static_cast<int>(n + 1 - i)) * x.pow(i);

  const QMatrix& a = inverse_vandermonde(n + 1);
  ClassElement rhs = ring->zero();
  for (long j = 0; j <= n + 1; ++j) {
    if (a(i, j).is_zero()) continue;
    FormalBundle line = FormalBundle::line("L^" + std::to_string(j), x * Rational(j));
    ClassElement rr = (td * chern_character(ring, line)).graded_piece(static_cast<int>(n + 1));
    rhs += rr * a(i, j);
  }
  rhs *= Rational(factorial(i));
  return make_report("EQ-REDUCTIONDRR", {{"n", n}, {"i", i}}, lhs.str(), rhs.str());
}

namespace detail {

/// The family P^n x P^1 -> P^1 as a model space, h1 on the fibre, h2 on the base.
inline ModelSpace family_space(long n) { return ModelSpace::product({static_cast<int>(n), 1}); }

/// deg < Td^{n+1-i}(T_{P^n}) c_1(O(a, b))^i >, by class calculus on P^n x P^1.
inline Rational family_pairing(const ModelSpace& family, long n, long i, long a, long b) {
  const auto& ring = family.ring();
  ClassElement fibre_todd =
      ring->gen("h1").substitute_into(todd_series(ring->cap())).pow(n + 1).graded_piece(static_cast<int>(n + 1 - i));
  const std::vector<long> twist{a, b};
  return family.integrate(fibre_todd * family.twist_class(twist).pow(i));
}

} // namespace detail

/// deg < Td^{n+1-i} c_1(L)^i > = i! sum_j A^{n+1}_{i,j} deg lambda(jL) for
/// L = O(a, b) on P^n x P^1 -> P^1.
inline IdentityReport check_reductiondrr_family(long n, long i, long a, long b) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1, "check_reductiondrr_family: need n >= 1, 1 <= i <= n+1");
  detail::check_range(a >= 1, "check_reductiondrr_family: a < 1");
  const ModelSpace family = detail::family_space(n);
  Rational lhs = detail::family_pairing(family, n, i, a, b);
  Rational rhs = detail::apply_row(n + 1, i, [&](long j) { return lambda_family_degree(n, j * a, j * b); });
  rhs *= Rational(factorial(i));
  return make_report("EQ-REDUCTIONDRR-FAMILY", {{"n", n}, {"i", i}, {"a", a}, {"b", b}}, lhs, rhs);
}

/// sum_j binom(i-1, j)(-1)^{i-1-j} sum_k A^{n+1}_{i,k} binom(kj, b)
///   = ((i-1)/2) i! sum_k A^{n+1}_{i,k} binom(k, b).
inline IdentityReport check_temp1(long n, long i, long b) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1 && b >= 0 && b <= n + 1, "check_temp1: parameter range");
  Rational lhs;
  for (long j = 0; j <= i - 1; ++j)
    lhs += binomial(i - 1, j) * detail::sign_power(i - 1 - j) *
           detail::apply_row(n + 1, i, [&](long k) { return binomial(k * j, b); });
  Rational rhs = Rational(i - 1, 2) * Rational(factorial(i)) *
                 detail::apply_row(n + 1, i, [&](long k) { return binomial(k, b); });
  return make_report("EQ-TEMP1", {{"n", n}, {"i", i}, {"b", b}}, lhs, rhs);
}

/// The same alternating sum scaled by 1/(i-1)! equals
/// (i(i-1)/2) sum_k A^{n+1}_{i,k} binom(k, r).
inline IdentityReport check_temp4(long n, long i, long r) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1 && r >= 0 && r <= n + 1, "check_temp4: parameter range");
  Rational lhs;
  for (long j = 0; j <= i - 1; ++j)
    lhs += binomial(i - 1, j) * detail::sign_power(i - 1 - j) / Rational(factorial(i - 1)) *
           detail::apply_row(n + 1, i, [&](long k) { return binomial(k * j, r); });
  Rational rhs = Rational(i * (i - 1), 2) * detail::apply_row(n + 1, i, [&](long k) { return binomial(k, r); });
  return make_report("EQ-TEMP4", {{"n", n}, {"i", i}, {"r", r}}, lhs, rhs);
}

/// sum_j A^{i-1}_{i-1,j} sum_k A^{n+1}_{i,k} binom(k + kj, l)
///   = (i(i+1)/2) sum_k A^{n+1}_{i,k} binom(k, l).
inline IdentityReport check_polarization_collapse(long n, long i, long l) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1 && l >= 0 && l <= n + 1,
                      "check_polarization_collapse: parameter range");
  const QMatrix& outer = inverse_vandermonde(i - 1);
  Rational lhs;
  for (long j = 0; j <= i - 1; ++j)
    lhs += outer(i - 1, j) * detail::apply_row(n + 1, i, [&](long k) { return binomial(k + k * j, l); });
  Rational rhs = Rational(i * (i + 1), 2) * detail::apply_row(n + 1, i, [&](long k) { return binomial(k, l); });
  return make_report("EQ-POLCOLLAPSE", {{"n", n}, {"i", i}, {"l", l}}, lhs, rhs);
}

/// (a) sum_j binom(i-1, j)(-1)^{i-1-j} j^b = 0 for 0 <= b < i-1;
/// (b) sum_k A^{n+1}_{i,k} k^b S_a(k) = 0 for i <= b and a + b <= n, where
///     S_a(k) = sum_{l=1..k} l^a.
/// Both sides are the vectors of all cell values, so one report covers (n, i).
inline IdentityReport check_vanishing_structure(long n, long i) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1, "check_vanishing_structure: parameter range");
  std::vector<Rational> values;
  for (long b = 0; b < i - 1; ++b) {
    Rational s;
    for (long j = 0; j <= i - 1; ++j)
      s += binomial(i - 1, j) * detail::sign_power(i - 1 - j) * power_zero_convention(j, b);
    values.push_back(s);
  }
  for (long a = 0; a + i <= n; ++a)
    for (long b = i; a + b <= n; ++b)
      values.push_back(detail::apply_row(n + 1, i, [&](long k) {
        Rational s;
        for (long l = 1; l <= k; ++l) s += power_zero_convention(l, a);
        return power_zero_convention(k, b) * s;
      }));
  return make_report("EQ-VANISHING", {{"n", n}, {"i", i}}, to_witness(values),
                     to_witness(std::vector<Rational>(values.size())));
}

// ---------------------------------------------------------------------------
// Explicit formula.

struct ExplicitTerm {
  long i, j, k, l;
  Rational coeff;  // (1/i!) binom(i-1, j) (-1)^{i-1-j} A^{n+1}_{i,k}
};

/// Coefficient table of the explicit nested sum over i in 1..n+1,
/// j in 0..i-1, k in 0..n+1, l in 1..k (the i = 0 block is empty), in
/// lexicographic (i, j, k, l) order.
inline std::vector<ExplicitTerm> explicit_drr_expansion(long n) {
  detail::check_range(n >= 1, "explicit_drr_expansion: n < 1");
  const QMatrix& a = inverse_vandermonde(n + 1);
  std::vector<ExplicitTerm> table;
  for (long i = 1; i <= n + 1; ++i)
    for (long j = 0; j <= i - 1; ++j) {
      Rational outer = binomial(i - 1, j) * detail::sign_power(i - 1 - j) / Rational(factorial(i));
      for (long k = 0; k <= n + 1; ++k)
        for (long l = 1; l <= k; ++l) table.push_back({i, j, k, l, outer * a(i, k)});
    }
  return table;
}

inline std::string explicit_drr_csv(const std::vector<ExplicitTerm>& table) {
  std::string s = "i,j,k,l,coeff\n";
  for (const auto& t : table)
    s += std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + "," + std::to_string(t.l) +
         "," + t.coeff.str() + "\n";
  return s;
}

namespace detail {

using Twist = std::pair<long, long>;

inline Twist combine(long x, Twist p, long y, Twist q) {
  return {x * p.first + y * q.first, x * p.second + y * q.second};
}

inline Rational family_lambda(long n, Twist m) { return lambda_family_degree(n, m.first, m.second); }

/// deg lambda_D(M) for D a divisor in |O(D)|, from 0 -> M(-D) -> M -> M|_D -> 0.
inline Rational divisor_lambda(long n, Twist m, Twist divisor) {
  return family_lambda(n, m) - family_lambda(n, combine(1, m, -1, divisor));
}

} // namespace detail

/// Degree shadow of the i-th block of the explicit formula on P^n x P^1:
///   sum_{j,k,l} coeff * (lambda_{Z(L+L0)}(l L0 + (kj+l) L) - lambda_{Z(L0)}(l L0 + kj L))
/// equals deg < Td^{n+1-i} c_1(L)^i > / i!.
inline IdentityReport check_explicit_drr_family(long n, long i, std::pair<long, long> line,
                                                std::pair<long, long> auxiliary) {
  detail::check_range(line.first >= 0 && auxiliary.first >= 1, "check_explicit_drr_family: need a >= 0, a0 >= 1");
  const detail::Twist big = detail::combine(1, line, 1, auxiliary);
  Rational lhs;
  for (const auto& t : explicit_drr_expansion(n)) {
    if (t.i != i) continue;
    auto first = detail::combine(t.l, auxiliary, t.k * t.j + t.l, line);
    auto second = detail::combine(t.l, auxiliary, t.k * t.j, line);
    lhs += t.coeff * (detail::divisor_lambda(n, first, big) - detail::divisor_lambda(n, second, auxiliary));
  }
  const ModelSpace family = detail::family_space(n);
  Rational rhs = detail::family_pairing(family, n, i, line.first, line.second) / Rational(factorial(i));
  return make_report("EQ-EXPLICIT-FAMILY",
                     {{"n", n}, {"i", i}, {"a", line.first}, {"b", line.second}, {"a0", auxiliary.first},
                      {"b0", auxiliary.second}},
                     lhs, rhs);
}

/// Divisor lambda combination on the family, with D in |L'|:
///   sum_j (1/(i-1)!) binom(i-1,j)(-1)^{i-1-j} sum_k A^{n+1}_{i,k}
///     sum_{l=1..k} (lambda_D(l L' + kj L + k L0) - lambda_D(l L' + kj L)) = 0.
inline IdentityReport check_temp3_family(long n, long i, std::pair<long, long> line, std::pair<long, long> l0,
                                         std::pair<long, long> divisor) {
  detail::check_range(n >= 1 && i >= 1 && i <= n + 1, "check_temp3_family: parameter range");
  detail::check_range(line.first >= 0 && l0.first >= 0 && divisor.first >= 1,
                      "check_temp3_family: twists must keep higher direct images zero");
  Rational lhs;
  for (long j = 0; j <= i - 1; ++j) {
    Rational outer = binomial(i - 1, j) * detail::sign_power(i - 1 - j) / Rational(factorial(i - 1));
    lhs += outer * detail::apply_row(n + 1, i, [&](long k) {
      Rational s;
      for (long l = 1; l <= k; ++l) {
        auto base = detail::combine(l, divisor, k * j, line);
        s += detail::divisor_lambda(n, detail::combine(1, base, k, l0), divisor) -
             detail::divisor_lambda(n, base, divisor);
      }
      return s;
    });
  }
  return make_report("EQ-TEMP3-FAMILY",
                     {{"n", n}, {"i", i}, {"a", line.first}, {"b", line.second}, {"a0", l0.first}, {"b0", l0.second}},
                     lhs, Rational(0));
}

} // namespace rrkernel
