// Machine-readable outcome of one identity check.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "exact.hpp"

namespace rrkernel {

enum class Outcome { pass, fail, inconclusive, solver_error };

inline const char* to_string(Outcome o) {
  switch (o) {
  case Outcome::pass: return "pass";
  case Outcome::fail: return "fail";
  case Outcome::inconclusive: return "inconclusive";
  case Outcome::solver_error: return "solver_error";
  }
  return "?";
}

struct IdentityReport {
  std::string id;
  std::map<std::string, long> params;
  bool passed = false;
  std::string lhs;
  std::string rhs;
  std::int64_t elapsed_ms = 0;
  // Exact checks only produce pass/fail; numeric probes may be inconclusive.
  Outcome outcome = Outcome::fail;

  friend bool operator<(const IdentityReport& a, const IdentityReport& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  }
};

/// Exact comparison of two canonical witnesses.
inline IdentityReport make_report(std::string id, std::map<std::string, long> params,
                                  std::string lhs, std::string rhs) {
  IdentityReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.passed = lhs == rhs;
  r.outcome = r.passed ? Outcome::pass : Outcome::fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

inline IdentityReport make_report(std::string id, std::map<std::string, long> params,
                                  const Rational& lhs, const Rational& rhs) {
  return make_report(std::move(id), std::move(params), lhs.str(), rhs.str());
}

inline std::string to_witness(const std::vector<Rational>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += values[i].str();
  }
  return s + "]";
}

} // namespace rrkernel
