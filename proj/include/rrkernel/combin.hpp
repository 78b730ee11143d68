// Vandermonde matrices, their exact inverses, interpolation coefficients,
// power sums and partial polarization.
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "report.hpp"

namespace rrkernel {

/// Dense row-major matrix of rationals.
class QMatrix {
public:
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("QMatrix: empty shape");
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  /// Exact determinant by fraction-based elimination.
  Rational determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: determinant of non-square matrix");
    QMatrix m = *this;
    Rational det(1);
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t p = c;
      while (p < rows_ && m(p, c).is_zero()) ++p;
      if (p == rows_) return Rational(0);
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t r = c + 1; r < rows_; ++r) {
        if (m(r, c).is_zero()) continue;
        Rational f = m(r, c) / m(c, c);
        for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return det;
  }

  /// Exact inverse by Gauss-Jordan elimination; throws if singular.
  QMatrix inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("QMatrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    QMatrix m = *this;
    QMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && m(p, c).is_zero()) ++p;
      if (p == n) throw std::domain_error("QMatrix: singular matrix");
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      Rational pivot = m(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(c, j) /= pivot;
        inv(c, j) /= pivot;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || m(r, c).is_zero()) continue;
        Rational f = m(r, c);
        for (std::size_t j = 0; j < n; ++j) {
          m(r, j) -= f * m(c, j);
          inv(r, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ", ";
      auto r = row(i);
      s += to_witness(std::vector<Rational>(r.begin(), r.end()));
    }
    return s + "]";
  }

private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// V^n with entries i^j, 0 <= i,j <= n, and 0^0 = 1.
inline std::ostream& operator<<(std::ostream& os, const QMatrix& m) { return os << m.str(); }

inline QMatrix vandermonde(long n) {
  if (n < 0) throw std::domain_error("vandermonde: n < 0");
  const auto size = static_cast<std::size_t>(n + 1);
  QMatrix v(size, size);
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) v(i, j) = power_zero_convention(i, j);
  return v;
}

namespace detail {

class InverseVandermondeCache {
public:
  std::shared_ptr<const QMatrix> get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    auto m = std::make_shared<const QMatrix>(vandermonde(n).inverse());
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(n, std::move(m)).first->second;
  }

  static InverseVandermondeCache& global() {
    static InverseVandermondeCache cache;
    return cache;
  }

private:
  std::shared_mutex mutex_;
  std::map<long, std::shared_ptr<const QMatrix>> cache_;
};

} // namespace detail

/// A^n = (V^n)^{-1}. Row j applied to samples f(0..n) extracts [x^j] f.
inline const QMatrix& inverse_vandermonde(long n) {
  if (n < 0) throw std::domain_error("inverse_vandermonde: n < 0");
  // Cache entries are never evicted, so the reference stays valid.
  return *detail::InverseVandermondeCache::global().get(n);
}

struct InterpCoeffs {
  long b = 0;
  std::vector<Rational> values;  // values[j] = [x^j] binom(x, b)

  Rational evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = values.rbegin(); it != values.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

/// B_{b,j} := [x^j] binom(x, b) = [x^j] x(x-1)...(x-b+1) / b!.
inline InterpCoeffs interp_coeffs(long b) {
  if (b < 0) throw std::domain_error("interp_coeffs: b < 0");
  std::vector<Rational> poly{Rational(1)};
  for (long t = 0; t < b; ++t) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * Rational(t);
    }
    poly = std::move(next);
  }
  Rational inv_fact(mpz_class(1), factorial(b));
  for (auto& c : poly) c *= inv_fact;
  return {b, std::move(poly)};
}

/// The closed form ((-1)^{b-j}/b!)[(x-1)...(x-(b-1))]_{j-1} as displayed in
/// the literature. Undefined for b = 0 (nullopt). Kept only for diagnostics;
/// it disagrees in sign with interp_coeffs at e.g. (b, j) = (2, 1).
inline std::optional<Rational> displayed_interp_coeff(long b, long j) {
  if (b <= 0 || j < 0) return std::nullopt;
  if (j == 0) return Rational(0);
  std::vector<Rational> poly{Rational(1)};
  for (long t = 1; t <= b - 1; ++t) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * Rational(t);
    }
    poly = std::move(next);
  }
  Rational coeff = (j - 1) < static_cast<long>(poly.size()) ? poly[j - 1] : Rational(0);
  Rational sign((b - j) % 2 == 0 ? 1 : -1);
  return sign * coeff / Rational(factorial(b));
}

struct InterpDiagnostic {
  long b;
  long j;
  Rational interpolation_value;
  std::optional<Rational> displayed_value;
  bool agree() const { return displayed_value && *displayed_value == interpolation_value; }
};

inline InterpDiagnostic interp_diagnostic(long b, long j) {
  auto coeffs = interp_coeffs(b);
  Rational forced = j >= 0 && j <= b ? coeffs.values[j] : Rational(0);
  return {b, j, forced, displayed_interp_coeff(b, j)};
}

/// sum_k A^n_{j,k} f(k). The degree <= n precondition on f is not checked.
inline Rational apply_A_to_samples(long n, long j, std::span<const Rational> f_samples) {
  if (n < 0 || j < 0 || j > n) throw std::domain_error("apply_A_to_samples: j outside 0..n");
  if (f_samples.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("apply_A_to_samples: expected n+1 samples");
  const QMatrix& a = inverse_vandermonde(n);
  Rational acc;
  for (long k = 0; k <= n; ++k) acc += a(j, k) * f_samples[k];
  return acc;
}

class InternalInconsistency : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// sum_{k=1..n} k^p, by direct summation and by the Bernoulli closed form
/// (1/(p+1)) sum_j binom(p+1, j) B_j n^{p+1-j}; throws if they differ.
inline Rational power_sum(long p, long n) {
  if (p < 0 || n < 0) throw std::domain_error("power_sum: negative argument");
  Rational direct;
  for (long k = 1; k <= n; ++k) direct += power_zero_convention(k, p);
  Rational closed;
  for (long j = 0; j <= p; ++j)
    closed += binomial(p + 1, j) * bernoulli(j) * power_zero_convention(n, p + 1 - j);
  closed /= Rational(p + 1);
  if (direct != closed)
    throw InternalInconsistency("power_sum(" + std::to_string(p) + ", " + std::to_string(n) +
                                "): direct " + direct.str() + " vs closed form " + closed.str());
  return direct;
}

namespace detail {

// Homogeneous polynomial of a fixed degree d in Q[x, y], stored by the
// exponent of y: coeffs[e] multiplies x^{d-e} y^e.
struct Homogeneous {
  long degree = 0;
  std::vector<Rational> coeffs{Rational(1)};

  static Homogeneous linear(const Rational& cx, const Rational& cy) {
    return {1, {cx, cy}};
  }

  friend Homogeneous operator*(const Homogeneous& a, const Homogeneous& b) {
    Homogeneous c{a.degree + b.degree, std::vector<Rational>(a.coeffs.size() + b.coeffs.size() - 1)};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) c.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return c;
  }

  Homogeneous& add_scaled(const Homogeneous& o, const Rational& s) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += s * o.coeffs[i];
    return *this;
  }

  std::string str() const {
    std::string s;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
      if (coeffs[e].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + coeffs[e].str() + ")*x^" + std::to_string(degree - static_cast<long>(e)) + "*y^" +
           std::to_string(e);
    }
    return s.empty() ? "0" : s;
  }
};

} // namespace detail

/// x y^n = (1/(n+1)) sum_j A^n_{n,j} (x + j y)^{n+1} - (n/2) y^{n+1} in Q[x, y].
inline IdentityReport partial_polarization_check(long n) {
  if (n < 1) throw std::domain_error("partial_polarization_check: n < 1");
  const QMatrix& a = inverse_vandermonde(n);
  detail::Homogeneous rhs{n + 1, std::vector<Rational>(static_cast<std::size_t>(n + 2))};
  for (long j = 0; j <= n; ++j) {
    detail::Homogeneous power;
    auto lin = detail::Homogeneous::linear(Rational(1), Rational(j));
    for (long e = 0; e <= n; ++e) power = power * lin;
    rhs.add_scaled(power, a(n, j) / Rational(n + 1));
  }
  rhs.coeffs[static_cast<std::size_t>(n + 1)] -= Rational(n, 2);

  detail::Homogeneous lhs{n + 1, std::vector<Rational>(static_cast<std::size_t>(n + 2))};
  lhs.coeffs[static_cast<std::size_t>(n)] = Rational(1);
  return make_report("PROP-PARTPOL", {{"n", n}}, lhs.str(), rhs.str());
}

} // namespace rrkernel
