// Model spaces (projective spaces, their products, hypersurfaces) with
// exact fibre integration and an independent Euler-characteristic oracle.
#pragma once

#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "classes.hpp"
#include "exact.hpp"
#include "report.hpp"
#include "series.hpp"

namespace rrkernel {

class ModelSpace {
public:
  enum class Kind { projective, product, hypersurface };

  static ModelSpace projective(int n) {
    if (n < 0) throw std::domain_error("ModelSpace: negative dimension");
    return ModelSpace(Kind::projective, {n}, 1);
  }

  static ModelSpace product(std::vector<int> dims) {
    if (dims.empty()) throw std::invalid_argument("ModelSpace: empty product");
    for (int d : dims)
      if (d < 0) throw std::domain_error("ModelSpace: negative dimension");
    return ModelSpace(Kind::product, std::move(dims), 1);
  }

  /// Degree-k hypersurface in P^n.
  static ModelSpace hypersurface(int n, int k) {
    if (n < 1) throw std::domain_error("ModelSpace: hypersurface needs n >= 1");
    if (k < 1) throw std::domain_error("ModelSpace: hypersurface degree must be >= 1");
    return ModelSpace(Kind::hypersurface, {n}, k);
  }

  Kind kind() const { return kind_; }
  const std::vector<int>& factor_dims() const { return dims_; }
  int hypersurface_degree() const { return degree_; }

  int dimension() const {
    int total = std::accumulate(dims_.begin(), dims_.end(), 0);
    return kind_ == Kind::hypersurface ? total - 1 : total;
  }

  const std::shared_ptr<const ClassRing>& ring() const { return ring_; }

  /// One hyperplane class per projective factor.
  std::vector<ClassElement> hyperplanes() const {
    std::vector<ClassElement> h;
    for (const auto& g : ring_->generators()) h.push_back(ring_->gen(g));
    return h;
  }

  /// c_1 of O(twist).
  ClassElement twist_class(std::span<const long> twist) const {
    check_twist(twist);
    ClassElement c = ring_->zero();
    auto h = hyperplanes();
    for (std::size_t i = 0; i < h.size(); ++i) c += h[i] * Rational(twist[i]);
    return c;
  }

  /// Degree of the top-dimensional part; lower-degree terms integrate to 0.
  Rational integrate(const ClassElement& e) const {
    if (e.ring_ptr() != ring_) throw std::invalid_argument("integrate: element from another ring");
    ClassRing::Exponents top(dims_.begin(), dims_.end());
    if (kind_ == Kind::hypersurface) {
      top[0] -= 1;
      return e.coefficient(top) * Rational(degree_);
    }
    return e.coefficient(top);
  }

  std::string name() const {
    switch (kind_) {
    case Kind::projective: return "P" + std::to_string(dims_[0]);
    case Kind::product: {
      std::string s;
      for (std::size_t i = 0; i < dims_.size(); ++i) s += (i ? "xP" : "P") + std::to_string(dims_[i]);
      return s;
    }
    case Kind::hypersurface:
      return "V" + std::to_string(degree_) + "inP" + std::to_string(dims_[0]);
    }
    return "?";
  }

  void check_twist(std::span<const long> twist) const {
    if (twist.size() != ring_->size())
      throw std::invalid_argument("ModelSpace: expected one twist per hyperplane class");
  }

private:
  ModelSpace(Kind kind, std::vector<int> dims, int degree) : kind_(kind), dims_(std::move(dims)), degree_(degree) {
    std::vector<std::string> gens;
    if (dims_.size() == 1) gens.push_back("h");
    else
      for (std::size_t i = 0; i < dims_.size(); ++i) gens.push_back("h" + std::to_string(i + 1));
    if (kind_ == Kind::hypersurface) ring_ = ClassRing::create(gens, dims_[0] - 1);
    else ring_ = ClassRing::create(gens, std::accumulate(dims_.begin(), dims_.end(), 0), dims_);
  }

  Kind kind_;
  std::vector<int> dims_;
  int degree_;
  std::shared_ptr<const ClassRing> ring_;
};

/// Td of the tangent bundle. P^n: (h/(1-e^{-h}))^{n+1} from the Euler
/// sequence; products multiply; a degree-k hypersurface divides the ambient
/// Todd class by Td(O(k)) through the normal sequence.
inline ClassElement tangent_todd(const ModelSpace& space) {
  const auto& ring = space.ring();
  const Series td = todd_series(ring->cap());
  auto h = space.hyperplanes();
  ClassElement acc = ring->one();
  for (std::size_t i = 0; i < h.size(); ++i) {
    ClassElement factor = h[i].substitute_into(td);
    acc *= factor.pow(space.factor_dims()[i] + 1);
  }
  if (space.kind() == ModelSpace::Kind::hypersurface) {
    ClassElement normal = (h[0] * Rational(space.hypersurface_degree())).substitute_into(td);
    acc *= normal.inverse();
  }
  return acc;
}

/// chi(O(d)) on P^n as the polynomial binom(n+d, n), valid for every integer d.
inline Rational euler_characteristic_projective(long n, long d) { return binomial(n + d, n); }

/// Closed-form cohomology count, independent of the class calculus.
inline Rational euler_characteristic(const ModelSpace& space, std::span<const long> twist) {
  space.check_twist(twist);
  const auto& dims = space.factor_dims();
  switch (space.kind()) {
  case ModelSpace::Kind::projective:
    return euler_characteristic_projective(dims[0], twist[0]);
  case ModelSpace::Kind::product: {
    Rational chi(1);
    for (std::size_t i = 0; i < dims.size(); ++i) chi *= euler_characteristic_projective(dims[i], twist[i]);
    return chi;
  }
  case ModelSpace::Kind::hypersurface: {
    const long n = dims[0];
    const long k = space.hypersurface_degree();
    return binomial(n + twist[0], n) - binomial(n + twist[0] - k, n);
  }
  }
  throw std::logic_error("euler_characteristic: unknown space kind");
}

inline std::map<std::string, long> space_params(const ModelSpace& space, std::span<const long> twist) {
  std::map<std::string, long> p;
  const auto& dims = space.factor_dims();
  if (space.kind() == ModelSpace::Kind::hypersurface) {
    p["n"] = dims[0];
    p["k"] = space.hypersurface_degree();
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) p["n" + std::to_string(i + 1)] = dims[i];
  }
  for (std::size_t i = 0; i < twist.size(); ++i) p["d" + std::to_string(i + 1)] = twist[i];
  return p;
}

/// Integral of Td(T) ch(O(twist)) against the Euler-characteristic oracle.
inline IdentityReport hrr_check(const ModelSpace& space, std::span<const long> twist) {
  const auto& ring = space.ring();
  FormalBundle line = FormalBundle::line("O(d)", space.twist_class(twist));
  Rational lhs = space.integrate(tangent_todd(space) * chern_character(ring, line));
  Rational rhs = euler_characteristic(space, twist);
  std::string id = space.kind() == ModelSpace::Kind::projective ? "HRR-PROJ"
                   : space.kind() == ModelSpace::Kind::product  ? "HRR-PRODUCT"
                                                                : "HRR-HYPERSURFACE";
  return make_report(id, space_params(space, twist), lhs, rhs);
}

/// Integral of prod c_1(L_i): the degree shadow of the Deligne pairing.
inline Rational pairing_degree(const ModelSpace& space, const std::vector<std::vector<long>>& line_bundles) {
  if (static_cast<int>(line_bundles.size()) != space.dimension())
    throw std::domain_error("pairing_degree: expected " + std::to_string(space.dimension()) +
                            " line bundles, got " + std::to_string(line_bundles.size()));
  ClassElement acc = space.ring()->one();
  for (const auto& t : line_bundles) acc *= space.twist_class(t);
  return space.integrate(acc);
}

/// deg det R pi_* O(a, b) for the trivial family P^n x P^1 -> P^1:
/// R pi_* O(a, b) = H^0(P^n, O(a)) (x) O(b) when a >= 0.
inline Rational lambda_family_degree(long n, long a, long b) {
  if (n < 0) throw std::domain_error("lambda_family_degree: n < 0");
  if (a < 0) throw std::domain_error("lambda_family_degree: a < 0 (higher direct images)");
  return Rational(b) * binomial(n + a, n);
}

} // namespace rrkernel
