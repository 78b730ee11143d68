// Relative-dimension-0 fibre integration: roots of p_s(z) as a weighted
// fibre over the parameter s, push-forward of test functions, continuity
// and multiplicity probes.
//
// Floating point is confined to this header.
#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exact.hpp"

namespace rrkernel::fiber {

using Complex = std::complex<double>;

/// Polynomial in (z, s) with exact rational coefficients, keyed by
/// (z-degree, s-degree).
class BivariatePoly {
public:
  using Key = std::pair<int, int>;

  static BivariatePoly constant(const Rational& c) {
    BivariatePoly p;
    p.add({0, 0}, c);
    return p;
  }
  static BivariatePoly z() {
    BivariatePoly p;
    p.add({1, 0}, Rational(1));
    return p;
  }
  static BivariatePoly s() {
    BivariatePoly p;
    p.add({0, 1}, Rational(1));
    return p;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }

  int z_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  BivariatePoly operator-() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.add(k, -c);
    return r;
  }
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a += -b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }

  BivariatePoly pow(long e) const {
    BivariatePoly r = constant(Rational(1));
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
  void add(Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<Key, Rational> terms_;
};

class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Recursive-descent parser for integer-coefficient polynomials in z and s:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | 'z' | 's' | '(' expr ')'
class PolyParser {
public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  BivariatePoly parse() {
    BivariatePoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BivariatePoly expr() {
    BivariatePoly acc = term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  BivariatePoly term() {
    BivariatePoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  BivariatePoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", start);
      if (digits.size() > 3) throw ParseError("exponent too large", start);
      return base.pow(std::stol(digits));
    }
    return base;
  }

  BivariatePoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)))
      return BivariatePoly::constant(Rational(mpz_class(read_digits(), 10)));
    if (c == 'z') {
      ++pos_;
      return BivariatePoly::z();
    }
    if (c == 's') {
      ++pos_;
      return BivariatePoly::s();
    }
    if (c == '(') {
      ++pos_;
      BivariatePoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// p_s(z) = sum_m c_m(s) z^m with each c_m an exact polynomial in s.
class PolyFamily {
public:
  explicit PolyFamily(const BivariatePoly& p) {
    int d = p.z_degree();
    if (d < 1) throw std::invalid_argument("PolyFamily: polynomial must have positive degree in z");
    coeff_fns_.assign(static_cast<std::size_t>(d + 1), {});
    for (const auto& [key, c] : p.terms()) {
      auto& row = coeff_fns_[static_cast<std::size_t>(key.first)];
      if (row.size() <= static_cast<std::size_t>(key.second)) row.resize(static_cast<std::size_t>(key.second + 1));
      row[static_cast<std::size_t>(key.second)] = c;
    }
  }

  static PolyFamily parse(std::string_view text) { return PolyFamily(PolyParser(text).parse()); }

  int degree() const { return static_cast<int>(coeff_fns_.size()) - 1; }

  /// Exact s-coefficients of each z^m coefficient.
  const std::vector<std::vector<Rational>>& coeff_fns() const { return coeff_fns_; }

  /// Coefficients c_0(s) .. c_d(s) in floating point.
  std::vector<Complex> coefficients_at(Complex s) const {
    std::vector<Complex> out;
    for (const auto& row : coeff_fns_) {
      Complex acc = 0;
      for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * s + it->to_double();
      out.push_back(acc);
    }
    return out;
  }

private:
  std::vector<std::vector<Rational>> coeff_fns_;
};

struct SolverOptions {
  double tau_group = 1e-6;   // relative cluster radius
  double residual = 1e-12;   // relative residual acceptance
  int max_iterations = 2000;
};

class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct FiberPoint {
  Complex value;
  int multiplicity = 1;
};

struct WeightedFiber {
  std::vector<FiberPoint> points;
  double scale = 1;            // root-magnitude scale used for clustering
  double condition = 0;        // max relative condition over simple roots
  double min_separation = 0;   // smallest distance between distinct clusters

  int total_multiplicity() const {
    int m = 0;
    for (const auto& p : points) m += p.multiplicity;
    return m;
  }
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc = 0;
  for (std::size_t m = c.size() - 1; m >= 1; --m) acc = acc * z + c[m] * static_cast<double>(m);
  return acc;
}

inline double magnitude_bound(const std::vector<Complex>& c) {
  // Fujiwara-style bound on root moduli.
  const std::size_t d = c.size() - 1;
  double bound = 0;
  for (std::size_t m = 0; m < d; ++m) {
    double r = std::abs(c[m] / c[d]);
    if (r > 0) bound = std::max(bound, std::pow(r, 1.0 / static_cast<double>(d - m)));
  }
  return bound;
}

// sum |c_m| max(1, |z|)^m: the size of p near z, floored at the coefficient norm.
inline double residual_scale(const std::vector<Complex>& c, Complex z) {
  double acc = 0;
  double az = std::max(1.0, std::abs(z));
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * az + std::abs(*it);
  return acc;
}

} // namespace detail

/// All roots of sum c_m z^m (c_d != 0) by Aberth-Ehrlich simultaneous
/// iteration. Each root is accepted once |p(z)| <= residual * sum |c_m| max(1,|z|)^m.
inline std::vector<Complex> aberth_roots(const std::vector<Complex>& c, const SolverOptions& opt = {}) {
  if (c.size() < 2) throw std::invalid_argument("aberth_roots: degree must be >= 1");
  if (c.back() == Complex(0)) throw SolverError("aberth_roots: leading coefficient vanishes");
  const std::size_t d = c.size() - 1;
  if (d == 1) return {-c[0] / c[1]};

  const double radius = std::max(detail::magnitude_bound(c), 1e-3);
  std::vector<Complex> z(d);
  for (std::size_t i = 0; i < d; ++i) {
    double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(d) + 0.4;
    z[i] = std::polar(radius, angle);
  }

  auto accepted = [&](std::size_t i) {
    return std::abs(detail::horner(c, z[i])) <= opt.residual * detail::residual_scale(c, z[i]);
  };
  // Once every root is accepted, keep polishing while steps still move the
  // iterates, so that clustered (multiple) roots contract below tau_group.
  int polish = 0;
  for (int iter = 0; iter < opt.max_iterations && polish < 200; ++iter) {
    double max_step = 0;
    for (std::size_t i = 0; i < d; ++i) {
      Complex p = detail::horner(c, z[i]);
      if (p == Complex(0)) continue;
      Complex dp = detail::horner_derivative(c, z[i]);
      Complex step;
      if (dp == Complex(0)) {
        step = std::polar(1e-8 * (1 + std::abs(z[i])), 0.7 * static_cast<double>(iter + 1));
      } else {
        Complex repulsion = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
        Complex newton = p / dp;
        Complex denom = 1.0 - newton * repulsion;
        step = denom == Complex(0) ? newton : newton / denom;
      }
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
        max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[i])));
      }
    }
    bool all = true;
    for (std::size_t i = 0; i < d && all; ++i) all = accepted(i);
    if (all && max_step <= 1e-16) break;
    if (all) ++polish;
  }
  for (std::size_t i = 0; i < d; ++i)
    if (!accepted(i))
      throw SolverError("aberth_roots: no convergence after " + std::to_string(opt.max_iterations) +
                        " iterations (root " + std::to_string(i) + ", residual " +
                        std::to_string(std::abs(detail::horner(c, z[i]))) + ")");
  return z;
}

/// Roots of p_s grouped into clusters of radius tau_group * scale; cluster
/// sizes are the multiplicities.
inline WeightedFiber fiber_at(const PolyFamily& family, Complex s, const SolverOptions& opt = {}) {
  auto c = family.coefficients_at(s);
  if (c.back() == Complex(0)) throw SolverError("fiber_at: leading coefficient vanishes at this parameter");
  auto roots = aberth_roots(c, opt);

  WeightedFiber fiber;
  fiber.scale = std::max(1.0, detail::magnitude_bound(c));
  const double tol = opt.tau_group * fiber.scale;

  // Single-linkage clustering.
  const std::size_t d = roots.size();
  std::vector<std::size_t> parent(d);
  for (std::size_t i = 0; i < d; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (std::abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);

  std::map<std::size_t, std::pair<Complex, int>> clusters;
  for (std::size_t i = 0; i < d; ++i) {
    auto& [sum, count] = clusters[find(i)];
    sum += roots[i];
    ++count;
  }
  for (const auto& [root, entry] : clusters)
    fiber.points.push_back({entry.first / static_cast<double>(entry.second), entry.second});
  std::sort(fiber.points.begin(), fiber.points.end(), [](const FiberPoint& a, const FiberPoint& b) {
    return std::make_pair(a.value.real(), a.value.imag()) < std::make_pair(b.value.real(), b.value.imag());
  });

  fiber.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fiber.points.size(); ++i) {
    for (std::size_t j = i + 1; j < fiber.points.size(); ++j)
      fiber.min_separation = std::min(fiber.min_separation, std::abs(fiber.points[i].value - fiber.points[j].value));
    if (fiber.points[i].multiplicity == 1) {
      Complex z = fiber.points[i].value;
      double dp = std::abs(detail::horner_derivative(c, z));
      double kappa = dp > 0 ? detail::residual_scale(c, z) / (dp * std::max(std::abs(z), 1e-300))
                            : std::numeric_limits<double>::infinity();
      fiber.condition = std::max(fiber.condition, kappa);
    }
  }
  return fiber;
}

/// Test function g from the fixed catalog.
class TestFunction {
public:
  static TestFunction named(const std::string& name) {
    if (name == "z") return {name, [](Complex z) { return z; }};
    if (name == "z2") return {name, [](Complex z) { return z * z; }};
    if (name == "abs2") return {name, [](Complex z) { return Complex(std::norm(z), 0); }};
    if (name == "re") return {name, [](Complex z) { return Complex(z.real(), 0); }};
    if (name == "const") return {name, [](Complex) { return Complex(1, 0); }};
    if (name.rfind("poly:", 0) == 0) return polynomial(parse_coefficients(name.substr(5)));
    throw std::invalid_argument("unknown test function '" + name + "' (expected z, z2, abs2, re, const, poly:c0,c1,...)");
  }

  /// sum_m coeffs[m] z^m.
  static TestFunction polynomial(std::vector<Rational> coeffs) {
    std::vector<double> c;
    std::string label = "poly:";
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      c.push_back(coeffs[m].to_double());
      label += (m ? "," : "") + coeffs[m].str();
    }
    return {label, [c](Complex z) {
              Complex acc = 0;
              for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
              return acc;
            }};
  }

  const std::string& name() const { return name_; }
  Complex operator()(Complex z) const { return fn_(z); }

private:
  TestFunction(std::string name, std::function<Complex(Complex)> fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  static std::vector<Rational> parse_coefficients(const std::string& list) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= list.size()) {
      auto comma = list.find(',', start);
      if (comma == std::string::npos) comma = list.size();
      out.push_back(Rational::parse(list.substr(start, comma - start)));
      start = comma + 1;
    }
    return out;
  }

  std::string name_;
  std::function<Complex(Complex)> fn_;
};

/// h(s) = sum over the weighted fibre of multiplicity * g(point).
inline Complex pushforward(const PolyFamily& family, const TestFunction& g, Complex s, const SolverOptions& opt = {}) {
  Complex acc = 0;
  for (const auto& p : fiber_at(family, s, opt).points) acc += static_cast<double>(p.multiplicity) * g(p.value);
  return acc;
}

struct ContinuityReport {
  Complex center;
  std::vector<double> radii;
  std::vector<double> oscillation;  // max |h(s) - h(center)| on the circle of each radius
  double slack = 1e-8;
  bool non_increasing = true;
};

/// Oscillation of the push-forward on circles of shrinking radius.
inline ContinuityReport continuity_probe(const PolyFamily& family, const TestFunction& g, Complex center,
                                         const std::vector<double>& radii, int samples_per_circle = 64,
                                         double slack = 1e-8, const SolverOptions& opt = {}) {
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i + 1] < radii[i])) throw std::invalid_argument("continuity_probe: radii must strictly decrease");
  ContinuityReport report{center, radii, {}, slack, true};
  const Complex h0 = pushforward(family, g, center, opt);
  for (double rho : radii) {
    double osc = 0;
    for (int m = 0; m < samples_per_circle; ++m) {
      Complex s = center + std::polar(rho, 2 * std::numbers::pi * m / samples_per_circle);
      osc = std::max(osc, std::abs(pushforward(family, g, s, opt) - h0));
    }
    if (!report.oscillation.empty() && osc > report.oscillation.back() + slack) report.non_increasing = false;
    report.oscillation.push_back(osc);
  }
  return report;
}

struct MultiplicityReport {
  std::vector<Complex> parameters;
  std::vector<int> counts;  // roots (with multiplicity) inside the disk, per parameter
  bool inconclusive = false;
  bool constant = false;
  int value = 0;
};

/// Samples s uniformly in the parameter disk (deterministic seed) and counts
/// roots inside |z - disk_center| < disk_radius. A root within the margin of
/// the boundary makes the probe inconclusive.
inline MultiplicityReport multiplicity_constancy(const PolyFamily& family, Complex disk_center, double disk_radius,
                                                 Complex param_center, double param_radius, int samples,
                                                 const SolverOptions& opt = {}, double margin = 1e-6,
                                                 std::uint64_t seed = 0x5eedULL) {
  if (!(disk_radius > 0)) throw std::invalid_argument("multiplicity_constancy: disk radius must be positive");
  if (samples < 1) throw std::invalid_argument("multiplicity_constancy: need at least one sample");
  MultiplicityReport report;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int m = 0; m < samples; ++m) {
    double r = param_radius * std::sqrt(unit(rng));
    double theta = 2 * std::numbers::pi * unit(rng);
    Complex s = param_center + std::polar(r, theta);
    auto fiber = fiber_at(family, s, opt);
    int inside = 0;
    for (const auto& p : fiber.points) {
      double dist = std::abs(p.value - disk_center);
      if (std::abs(dist - disk_radius) <= margin * std::max(1.0, disk_radius)) report.inconclusive = true;
      if (dist < disk_radius) inside += p.multiplicity;
    }
    report.parameters.push_back(s);
    report.counts.push_back(inside);
  }
  report.value = report.counts.front();
  report.constant = std::all_of(report.counts.begin(), report.counts.end(), [&](int c) { return c == report.value; });
  return report;
}

/// Deterministic uniform samples in a disk.
inline std::vector<Complex> disk_samples(Complex center, double radius, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> out;
  for (int m = 0; m < count; ++m) {
    double r = radius * std::sqrt(unit(rng));
    double theta = 2 * std::numbers::pi * unit(rng);
    out.push_back(center + std::polar(r, theta));
  }
  return out;
}

} // namespace rrkernel::fiber
