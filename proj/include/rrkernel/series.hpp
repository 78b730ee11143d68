// Truncated univariate power series over the rationals, and the generating
// functions built from them: Todd, exponential, the R-genus and the
// projective-space constants it enters.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace rrkernel {

/// Dense truncated series sum_{k=0..order} c_k x^k; terms above the order
/// are dropped by every operation.
class Series {
public:
  explicit Series(long order = 0) : coeffs_(checked_size(order)) {}

  Series(long order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(checked_size(order));
  }

  static Series constant(const Rational& c, long order) {
    Series s(order);
    s.coeffs_[0] = c;
    return s;
  }

  static Series monomial(const Rational& c, long degree, long order) {
    Series s(order);
    if (degree >= 0 && degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
    return s;
  }

  long order() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the order.
  Rational operator[](long k) const {
    return k >= 0 && k <= order() ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
  }

  void set(long k, const Rational& c) {
    if (k < 0 || k > order()) throw std::out_of_range("Series::set: index beyond order");
    coeffs_[static_cast<std::size_t>(k)] = c;
  }

  Series truncated(long order) const { return Series(order, coeffs_); }

  Series& operator+=(const Series& o) {
    for (long k = 0; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] += o[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    for (long k = 0; k <= order(); ++k) coeffs_[static_cast<std::size_t>(k)] -= o[k];
    return *this;
  }
  Series& operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
  }

  // Binary operations truncate to the smaller order.
  friend Series operator+(const Series& a, const Series& b) {
    Series r = a.truncated(std::min(a.order(), b.order()));
    return r += b;
  }
  friend Series operator-(const Series& a, const Series& b) {
    Series r = a.truncated(std::min(a.order(), b.order()));
    return r -= b;
  }
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }

  friend Series operator*(const Series& a, const Series& b) {
    const long order = std::min(a.order(), b.order());
    Series r(order);
    for (long i = 0; i <= order; ++i) {
      if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
      for (long j = 0; i + j <= order; ++j)
        r.coeffs_[static_cast<std::size_t>(i + j)] +=
            a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return r;
  }

  Series pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Series r = constant(Rational(1), order());
    Series base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  Series inverse() const {
    if (coeffs_[0].is_zero()) throw std::domain_error("Series::inverse: zero constant term");
    Series r(order());
    Rational inv0 = Rational(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (long m = 1; m <= order(); ++m) {
      Rational acc;
      for (long k = 1; k <= m; ++k)
        acc += coeffs_[static_cast<std::size_t>(k)] * r.coeffs_[static_cast<std::size_t>(m - k)];
      r.coeffs_[static_cast<std::size_t>(m)] = -acc * inv0;
    }
    return r;
  }

  /// f(c x).
  Series scaled(const Rational& c) const {
    Series r = *this;
    Rational p(1);
    for (auto& v : r.coeffs_) {
      v *= p;
      p *= c;
    }
    return r;
  }

  friend bool operator==(const Series&, const Series&) = default;

  std::string str() const;

private:
  static std::size_t checked_size(long order) {
    if (order < 0) throw std::domain_error("Series: negative order");
    return static_cast<std::size_t>(order + 1);
  }

  std::vector<Rational> coeffs_;
};

inline std::string Series::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ", ";
    s += coeffs_[i].str();
  }
  return s + "]";
}

/// x / (1 - e^{-x}) truncated at the given order; coefficient k is B_k / k!.
inline std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

inline Series todd_series(long order) {
  if (order < 0) throw std::domain_error("todd_series: negative order");
  Series s(order);
  auto b = BernoulliTable::global().prefix(static_cast<std::size_t>(order + 1));
  for (long k = 0; k <= order; ++k)
    s.set(k, b[static_cast<std::size_t>(k)] / Rational(factorial(k)));
  return s;
}

/// e^{c x}: coefficient k is c^k / k!.
inline Series exp_series(const Rational& c, long order) {
  Series s(order);
  Rational term(1);
  for (long k = 0; k <= order; ++k) {
    s.set(k, term);
    term = term * c / Rational(k + 1);
  }
  return s;
}

/// A rational series plus rational multiples of symbolic atoms zeta'(-n),
/// n odd; the atoms are never evaluated.
struct ZetaSeries {
  Series rational_part;
  std::map<long, Series> zeta_prime_parts;

  explicit ZetaSeries(long order = 0) : rational_part(order) {}

  long order() const { return rational_part.order(); }

  /// Coefficient of x^k as (rational, {n -> multiplier of zeta'(-n)}).
  std::pair<Rational, std::map<long, Rational>> coefficient(long k) const {
    std::map<long, Rational> atoms;
    for (const auto& [n, s] : zeta_prime_parts)
      if (!s[k].is_zero()) atoms.emplace(n, s[k]);
    return {rational_part[k], std::move(atoms)};
  }

  ZetaSeries& add_atom(long n, const Series& s) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("ZetaSeries: atom index must be odd and positive");
    auto [it, inserted] = zeta_prime_parts.try_emplace(n, s.truncated(order()));
    if (!inserted) it->second += s;
    return *this;
  }

  friend ZetaSeries operator*(const Series& f, const ZetaSeries& z) {
    ZetaSeries r(std::min(f.order(), z.order()));
    r.rational_part = f * z.rational_part;
    for (const auto& [n, s] : z.zeta_prime_parts) r.zeta_prime_parts.emplace(n, f * s);
    return r;
  }

  ZetaSeries& operator*=(const Rational& c) {
    rational_part *= c;
    for (auto& [n, s] : zeta_prime_parts) s *= c;
    return *this;
  }

  /// Value with every atom set to zero.
  const Series& atoms_zeroed() const { return rational_part; }

  /// Numeric hook: substitutes a caller-supplied table of zeta'(-n) values.
  /// Missing atoms count as zero.
  std::vector<double> evaluate_numeric(const std::map<long, double>& zeta_prime_values) const {
    std::vector<double> out(static_cast<std::size_t>(order() + 1));
    for (long k = 0; k <= order(); ++k) {
      double v = rational_part[k].to_double();
      for (const auto& [n, s] : zeta_prime_parts)
        if (auto it = zeta_prime_values.find(n); it != zeta_prime_values.end())
          v += s[k].to_double() * it->second;
      out[static_cast<std::size_t>(k)] = v;
    }
    return out;
  }
};

/// zeta(-n) = -B_{n+1}/(n+1) for n >= 1.
inline Rational zeta_at_negative(long n) {
  if (n < 1) throw std::domain_error("zeta_at_negative: n < 1");
  return -bernoulli(n + 1) / Rational(n + 1);
}

/// R(x) = sum_{n odd} (H_n zeta(-n) + 2 zeta'(-n)) x^n / n!.
inline ZetaSeries r_genus(long order) {
  ZetaSeries r(order);
  for (long n = 1; n <= order; n += 2) {
    Rational inv_fact(mpz_class(1), factorial(n));
    r.rational_part.set(n, harmonic(n) * zeta_at_negative(n) * inv_fact);
    r.add_atom(n, Series::monomial(Rational(2) * inv_fact, n, order));
  }
  return r;
}

struct GsItem3 {
  Rational harmonic_part;
  Rational integral_part;
};

/// Rational constants of the degree-(n+1) Todd pairing on projective space:
///   harmonic_part = sum_{i=1..n} H_i * [Td(x)^{n+1}]_{n+1}
///   integral_part = [ int_0^1 (phi(t) - phi(0))/t dt ]_n,
///   phi(t) = (1/(tx) - e^{-tx}/(1-e^{-tx})) Td(x)^{n+1}.
/// With u = tx, 1/u - 1/(e^u - 1) = 1/2 - sum_{m>=2} Bm^- u^{m-1}/m! where
/// Bm^- = (-1)^m B_m; subtracting phi(0) removes the constant 1/2, and
/// int_0^1 t^{m-2} dt = 1/(m-1).
inline GsItem3 gs_constant_item3(long n) {
  if (n < 1) throw std::domain_error("gs_constant_item3: n < 1");
  const Series todd_power = todd_series(n + 1).pow(n + 1);

  Rational harmonic_sum;
  for (long i = 1; i <= n; ++i) harmonic_sum += harmonic(i);

  // Integrated kernel in x: sum_{m>=2} -Bm^- x^{m-1} / (m! (m-1)).
  Series kernel(n);
  for (long m = 2; m - 1 <= n; ++m) {
    Rational minus_convention = (m % 2 == 0 ? Rational(1) : Rational(-1)) * bernoulli(m);
    kernel.set(m - 1, -minus_convention / (Rational(factorial(m)) * Rational(m - 1)));
  }
  Series integrated = kernel * todd_power.truncated(n);
  return {harmonic_sum * todd_power[n + 1], integrated[n]};
}

/// [(n+1) Td(x)^{n+1} R(x)]_n as a rational part plus zeta'-atom multipliers.
inline std::pair<Rational, std::map<long, Rational>> gs_constant_item2(long n) {
  if (n < 1) throw std::domain_error("gs_constant_item2: n < 1");
  ZetaSeries product = todd_series(n).pow(n + 1) * r_genus(n);
  product *= Rational(n + 1);
  return product.coefficient(n);
}

} // namespace rrkernel
