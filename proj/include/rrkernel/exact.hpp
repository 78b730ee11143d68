// Exact rational arithmetic and elementary combinatorial functions.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <mutex>
#include <ostream>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace rrkernel {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(mpz_class(std::to_string(v))) {}
  Rational(const mpz_class& v) : v_(v) {}

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(mpz_class(s, 10));
      return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }

  /// Canonical form: "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(10); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; 0^0 = 1, negative exponents invert.
  Rational pow(long e) const {
    if (e < 0) return Rational(1) / pow(-e);
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  mpq_class v_{0};
};

inline mpz_class factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

/// Generalized binomial n(n-1)...(n-k+1)/k!, defined for every integer n.
inline Rational binomial(long n, long k) {
  if (k < 0) throw std::domain_error("binomial: k < 0");
  if (n >= 0 && n < k) return Rational(0);
  mpz_class num = 1;
  for (long t = 0; t < k; ++t) num *= mpz_class(n - t);
  return Rational(num, factorial(k));
}

/// i^j with 0^0 = 1.
inline Rational power_zero_convention(long i, long j) {
  if (j < 0) throw std::domain_error("power_zero_convention: negative exponent");
  return Rational(i).pow(j);
}

inline Rational harmonic(long n) {
  if (n < 1) throw std::domain_error("harmonic: n < 1");
  Rational h;
  for (long k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

/// Memoized Bernoulli numbers in the B_1 = +1/2 convention, i.e. the
/// coefficients of t/(1 - e^{-t}) = sum B_m t^m / m!.
///
/// The table grows by exact series division; readers never observe a
/// partially extended table.
class BernoulliTable {
public:
  Rational get(std::size_t m) {
    {
      std::shared_lock lock(mutex_);
      if (m < values_.size()) return values_[m];
    }
    std::unique_lock lock(mutex_);
    extend(m);
    return values_[m];
  }

  std::vector<Rational> prefix(std::size_t count) {
    if (count == 0) return {};
    get(count - 1);
    std::shared_lock lock(mutex_);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(count)};
  }

  static BernoulliTable& global() {
    static BernoulliTable table;
    return table;
  }

private:
  // (1 - e^{-t})/t = sum_k d_k t^k with d_k = (-1)^k/(k+1)!; its inverse c
  // satisfies c_0 = 1, c_m = -sum_{k=1..m} d_k c_{m-k}, and B_m = m! c_m.
  void extend(std::size_t m) {
    while (quotient_.size() <= m) {
      std::size_t next = quotient_.size();
      if (next == 0) {
        quotient_.push_back(Rational(1));
      } else {
        Rational c;
        for (std::size_t k = 1; k <= next; ++k) {
          Rational d(mpz_class(k % 2 == 0 ? 1 : -1), factorial(static_cast<long>(k) + 1));
          c -= d * quotient_[next - k];
        }
        quotient_.push_back(c);
      }
      values_.push_back(quotient_.back() * Rational(factorial(static_cast<long>(next))));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rational> quotient_;
  std::vector<Rational> values_;
};

inline Rational bernoulli(long m) {
  if (m < 0) throw std::domain_error("bernoulli: m < 0");
  return BernoulliTable::global().get(static_cast<std::size_t>(m));
}

} // namespace rrkernel

template <>
struct std::hash<rrkernel::Rational> {
  std::size_t operator()(const rrkernel::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.str());
  }
};
