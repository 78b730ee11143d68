// Truncated graded polynomial ring of formal Chern roots and the
// characteristic classes built in it.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "series.hpp"

namespace rrkernel {

class ClassElement;

/// Commutative ring Q[g_1, ..., g_m] with every generator in degree 1,
/// modulo all monomials of total degree > cap and, optionally, g_i^{b_i+1}
/// for per-generator bounds b_i. Immutable once created.
class ClassRing : public std::enable_shared_from_this<ClassRing> {
public:
  using Exponents = std::vector<int>;

  static std::shared_ptr<const ClassRing> create(std::vector<std::string> generators, int cap,
                                                 std::vector<int> bounds = {}) {
    if (cap < 0) throw std::domain_error("ClassRing: negative cap");
    if (!bounds.empty() && bounds.size() != generators.size())
      throw std::invalid_argument("ClassRing: one bound per generator required");
    auto sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("ClassRing: duplicate generator name");
    if (bounds.empty()) bounds.assign(generators.size(), cap);
    return std::shared_ptr<const ClassRing>(new ClassRing(std::move(generators), cap, std::move(bounds)));
  }

  int cap() const { return cap_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<int>& bounds() const { return bounds_; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - generators_.begin());
  }

  std::size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("ClassRing: unknown generator '" + name + "'");
    return *i;
  }

  /// True when the monomial survives the truncation and relations.
  bool admissible(const Exponents& e) const {
    int total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > bounds_[i]) return false;
      total += e[i];
    }
    return total <= cap_;
  }

  ClassElement zero() const;
  ClassElement one() const;
  ClassElement constant(const Rational& c) const;
  ClassElement gen(const std::string& name) const;

private:
  ClassRing(std::vector<std::string> generators, int cap, std::vector<int> bounds)
      : generators_(std::move(generators)), cap_(cap), bounds_(std::move(bounds)) {}

  std::vector<std::string> generators_;
  int cap_;
  std::vector<int> bounds_;
};

/// Element of a ClassRing: sorted map from exponent vector to nonzero
/// coefficient, so equal elements have identical representations.
class ClassElement {
public:
  using Exponents = ClassRing::Exponents;
  using Terms = std::map<Exponents, Rational>;

  explicit ClassElement(std::shared_ptr<const ClassRing> ring) : ring_(std::move(ring)) {}

  ClassElement(std::shared_ptr<const ClassRing> ring, Terms terms) : ring_(std::move(ring)) {
    for (auto& [e, c] : terms) add_term(e, c);
  }

  const ClassRing& ring() const { return *ring_; }
  const std::shared_ptr<const ClassRing>& ring_ptr() const { return ring_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(ring_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ClassElement& operator+=(const ClassElement& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  ClassElement& operator-=(const ClassElement& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  ClassElement& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  ClassElement operator-() const {
    ClassElement r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
  }

  friend ClassElement operator+(ClassElement a, const ClassElement& b) { return a += b; }
  friend ClassElement operator-(ClassElement a, const ClassElement& b) { return a -= b; }
  friend ClassElement operator*(ClassElement a, const Rational& c) { return a *= c; }
  friend ClassElement operator*(const Rational& c, ClassElement a) { return a *= c; }

  friend ClassElement operator*(const ClassElement& a, const ClassElement& b) {
    a.check_same_ring(b);
    ClassElement r(a.ring_);
    Exponents e(a.ring_->size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        if (a.ring_->admissible(e)) r.add_term(e, ca * cb);
      }
    return r;
  }

  ClassElement& operator*=(const ClassElement& o) { return *this = *this * o; }

  ClassElement pow(long k) const {
    if (k < 0) throw std::domain_error("ClassElement::pow: negative exponent");
    ClassElement r = ring_->one();
    for (long i = 0; i < k; ++i) r *= *this;
    return r;
  }

  /// Sum of the terms of total degree k.
  ClassElement graded_piece(int k) const {
    if (k < 0 || k > ring_->cap()) throw std::domain_error("graded_piece: degree outside 0..cap");
    ClassElement r(ring_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) == k) r.terms_.emplace(e, c);
    return r;
  }

  /// f(self) for a univariate series f; requires a zero constant term so
  /// the substitution is a finite sum in the truncated ring.
  ClassElement substitute_into(const Series& f) const {
    if (!constant_term().is_zero())
      throw std::domain_error("substitute_into: argument has a nonzero constant term");
    ClassElement acc(ring_);
    const long top = std::min<long>(f.order(), ring_->cap());
    for (long k = top; k >= 0; --k) {
      acc *= *this;
      acc += ring_->constant(f[k]);
    }
    return acc;
  }

  /// Multiplicative inverse; requires a nonzero constant term.
  ClassElement inverse() const {
    Rational c0 = constant_term();
    if (c0.is_zero()) throw std::domain_error("ClassElement::inverse: zero constant term");
    // 1/(c0 (1 + u)) = (1/c0) sum_k (-u)^k, finite since u is nilpotent.
    ClassElement u = *this * (Rational(1) / c0) - ring_->one();
    ClassElement geometric = u.substitute_into(Series(ring_->cap(), alternating_ones(ring_->cap())));
    return geometric * (Rational(1) / c0);
  }

  friend bool operator==(const ClassElement& a, const ClassElement& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "1 + 3/2*h + h^2".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->generators()[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (!s.empty()) s += " + ";
      if (mono.empty()) s += c.str();
      else if (c == Rational(1)) s += mono;
      else s += c.str() + "*" + mono;
    }
    return s;
  }

private:
  static std::vector<Rational> alternating_ones(int cap) {
    std::vector<Rational> v;
    for (int k = 0; k <= cap; ++k) v.emplace_back(k % 2 == 0 ? 1 : -1);
    return v;
  }

  void check_same_ring(const ClassElement& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ClassElement: operands from different rings");
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero() || !ring_->admissible(e)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::shared_ptr<const ClassRing> ring_;
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const ClassElement& e) { return os << e.str(); }

inline ClassElement ClassRing::zero() const { return ClassElement(shared_from_this()); }

inline ClassElement ClassRing::constant(const Rational& c) const {
  return ClassElement(shared_from_this(), {{Exponents(size(), 0), c}});
}

inline ClassElement ClassRing::one() const { return constant(Rational(1)); }

inline ClassElement ClassRing::gen(const std::string& name) const {
  Exponents e(size(), 0);
  e[require(name)] = 1;
  return ClassElement(shared_from_this(), {{e, Rational(1)}});
}

/// A vector bundle through the splitting principle: a list of Chern roots,
/// each a degree-1 element of the ring (usually a bare generator).
struct FormalBundle {
  std::string name;
  std::vector<ClassElement> roots;

  std::size_t rank() const { return roots.size(); }

  /// Bundle whose roots are the named generators.
  static FormalBundle from_generators(const std::shared_ptr<const ClassRing>& ring, std::string name,
                                      const std::vector<std::string>& root_names) {
    FormalBundle b{std::move(name), {}};
    for (const auto& r : root_names) b.roots.push_back(ring->gen(r));
    return b;
  }

  /// Line bundle with the given first Chern class.
  static FormalBundle line(std::string name, ClassElement c1) {
    return {std::move(name), {std::move(c1)}};
  }
};

namespace detail {

inline void check_root(const ClassElement& r) {
  for (const auto& [e, c] : r.terms())
    if (std::accumulate(e.begin(), e.end(), 0) != 1)
      throw std::invalid_argument("FormalBundle: Chern roots must be homogeneous of degree 1");
}

inline std::optional<std::size_t> bare_generator(const ClassElement& r) {
  if (r.terms().size() != 1) return std::nullopt;
  const auto& [e, c] = *r.terms().begin();
  if (c != Rational(1)) return std::nullopt;
  auto it = std::find(e.begin(), e.end(), 1);
  if (it == e.end() || std::accumulate(e.begin(), e.end(), 0) != 1) return std::nullopt;
  return static_cast<std::size_t>(it - e.begin());
}

} // namespace detail

/// E (+) F by root concatenation. Bundles built from generators must use
/// disjoint root generators.
inline FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f) {
  for (const auto& a : e.roots)
    for (const auto& b : f.roots) {
      auto ga = detail::bare_generator(a);
      if (ga && ga == detail::bare_generator(b))
        throw std::invalid_argument("direct_sum: bundles '" + e.name + "' and '" + f.name +
                                    "' share a root generator");
    }
  FormalBundle s{e.name + "+" + f.name, e.roots};
  s.roots.insert(s.roots.end(), f.roots.begin(), f.roots.end());
  return s;
}

namespace detail {

template <typename PerRoot>
ClassElement product_over_roots(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& b,
                                PerRoot&& per_root) {
  ClassElement acc = ring->one();
  for (const auto& r : b.roots) {
    check_root(r);
    acc *= per_root(r);
  }
  return acc;
}

inline const std::shared_ptr<const ClassRing>& ring_of(const FormalBundle& b,
                                                       const std::shared_ptr<const ClassRing>& ring) {
  for (const auto& r : b.roots)
    if (r.ring_ptr() != ring) throw std::invalid_argument("bundle '" + b.name + "' not in this ring");
  return ring;
}

} // namespace detail

/// c(E) = prod (1 + root).
inline ClassElement chern_total(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& e) {
  return detail::product_over_roots(detail::ring_of(e, ring), e,
                                    [&](const ClassElement& r) { return ring->one() + r; });
}

/// c_k(E), the degree-k piece of the total Chern class.
inline ClassElement chern_class(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& e, int k) {
  return chern_total(ring, e).graded_piece(k);
}

/// s(E) = c(E)^{-1}.
inline ClassElement segre_total(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& e) {
  return chern_total(ring, e).inverse();
}

/// ch(E) = sum exp(root).
inline ClassElement chern_character(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& e) {
  detail::ring_of(e, ring);
  const Series ex = exp_series(Rational(1), ring->cap());
  ClassElement acc = ring->zero();
  for (const auto& r : e.roots) {
    detail::check_root(r);
    acc += r.substitute_into(ex);
  }
  return acc;
}

/// Td(E) = prod root / (1 - e^{-root}).
inline ClassElement todd_class(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& e) {
  const Series td = todd_series(ring->cap());
  return detail::product_over_roots(detail::ring_of(e, ring), e,
                                    [&](const ClassElement& r) { return r.substitute_into(td); });
}

/// RR(E) = Td(T) ch(E), T in the role of the relative tangent bundle.
inline ClassElement rr_polynomial(const std::shared_ptr<const ClassRing>& ring, const FormalBundle& tangent,
                                  const FormalBundle& e) {
  return todd_class(ring, tangent) * chern_character(ring, e);
}

inline ClassElement graded_piece(const ClassElement& e, int k) { return e.graded_piece(k); }

/// sum_{j=0..cap} ((-1)^j / j!) B_j d^j: the Todd factor of the normal
/// bundle O_D(D) moved across a divisor restriction.
inline ClassElement divisor_restriction_factor(const ClassElement& d, int cap) {
  Series f(cap);
  for (long j = 0; j <= cap; ++j)
    f.set(j, Rational(j % 2 == 0 ? 1 : -1) * bernoulli(j) / Rational(factorial(j)));
  return d.substitute_into(f);
}

} // namespace rrkernel
