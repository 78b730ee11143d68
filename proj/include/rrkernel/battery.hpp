// Identity batteries: cell lists per suite, a deterministic parallel runner
// and the JSON report format.
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fiberint.hpp"
#include "identities.hpp"
#include "report.hpp"

namespace rrkernel {

enum class Suite { all, appendixA, drr, hrr, lambda, fiberint };

inline Suite parse_suite(const std::string& name) {
  if (name == "all") return Suite::all;
  if (name == "appendixA") return Suite::appendixA;
  if (name == "drr") return Suite::drr;
  if (name == "hrr") return Suite::hrr;
  if (name == "lambda") return Suite::lambda;
  if (name == "fiberint") return Suite::fiberint;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

struct Cell {
  std::string id;
  std::function<IdentityReport()> run;
};

/// Parameter ranges of the exact batteries.
struct Ranges {
  long vand_n = 10;
  long binom1_n = 12;
  long prop_a_n = 8;
  long prop_a_a = 5;
  long partpol_n = 6;
  long powersum_p = 8;
  long powersum_n = 20;
  long bern_m = 12;
  long todd_k = 20;
  long gs_n = 8;
  long hrr_proj_n = 4;
  long hrr_proj_d = 6;
  long hrr_product_dim = 4;
  long hrr_product_d = 4;
  long hrr_hyper_n = 4;
  long hrr_hyper_k = 4;
  long hrr_hyper_d = 4;
  long lambda_n = 6;
  long lambda_d = 5;
  long drr_symbolic_n = 5;
  long drr_family_n = 3;
  long drr_family_a = 4;
  long drr_family_b = 3;
  long lemma_n = 8;
  long bern_collapse_a = 12;
  long composite_n = 4;

  /// Ranges scaled to a CLI --n-max; fixed-size sweeps (twists, Bernoulli
  /// indices) keep their defaults.
  static Ranges for_n_max(long n_max) {
    Ranges r;
    r.vand_n = r.binom1_n = r.prop_a_n = r.partpol_n = r.powersum_p = r.gs_n = n_max;
    r.hrr_proj_n = r.hrr_product_dim = r.hrr_hyper_n = n_max;
    r.lambda_n = r.lemma_n = n_max;
    r.drr_symbolic_n = std::min(n_max, 6L);
    r.drr_family_n = std::min(n_max, 6L);
    r.composite_n = std::min(n_max, 4L);
    return r;
  }
};

struct FiberConfig {
  fiber::SolverOptions solver;
  int pushforward_samples = 100;
  double pushforward_tolerance = 1e-8;
  double continuity_slack = 1e-8;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

inline std::string format_complex(fiber::Complex z) {
  return format_double(z.real()) + (z.imag() < 0 ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

} // namespace detail

inline void append_appendix_a(std::vector<Cell>& cells, const Ranges& r) {
  for (long n = 0; n <= r.vand_n; ++n) {
    cells.push_back({"PROP-VAND-DET", [n] { return check_vandermonde_determinant(n); }});
    cells.push_back({"PROP-VAND-ROW", [n] { return check_vandermonde_last_row(n); }});
    cells.push_back({"PROP-VAND-INV", [n] { return check_vandermonde_inverse(n); }});
  }
  for (long n = 1; n <= r.binom1_n; ++n)
    for (long k = 0; k <= n + 1; ++k) cells.push_back({"PROP-BINOM1", [n, k] { return check_binom1(n, k); }});
  for (long n = 0; n <= r.prop_a_n; ++n)
    for (long a = 0; a <= r.prop_a_a; ++a)
      for (long b = 0; b <= n; ++b)
        for (long j = 0; j <= n; ++j) cells.push_back({"PROP-A", [=] { return check_prop_A(n, a, b, j); }});
  for (long b = 0; b <= r.prop_a_n; ++b)
    for (long m = 0; m <= 2 * b + 2; ++m)
      cells.push_back({"PROP-A-INTERP", [b, m] { return check_interp_evaluation(b, m); }});
  for (long n = 1; n <= r.partpol_n; ++n) cells.push_back({"PROP-PARTPOL", [n] { return partial_polarization_check(n); }});
  for (long p = 0; p <= r.powersum_p; ++p)
    for (long n = 0; n <= r.powersum_n; ++n) cells.push_back({"PROP-POWERSUM", [p, n] { return check_power_sum(p, n); }});
  for (long m = 0; m <= r.bern_m; ++m) {
    cells.push_back({"PROP-BERN-1", [m] { return check_bernoulli_recurrence(1, m); }});
    cells.push_back({"PROP-BERN-2", [m] { return check_bernoulli_recurrence(2, m); }});
    if (m >= 1) cells.push_back({"PROP-BERN-3", [m] { return check_bernoulli_recurrence(3, m); }});
    cells.push_back({"PROP-BERN-COLLAPSE", [m] { return check_bernoulli_collapse(m); }});
  }
}

inline void append_drr(std::vector<Cell>& cells, const Ranges& r) {
  for (long k = 0; k <= r.todd_k; ++k) cells.push_back({"TODD-BERNOULLI", [k] { return check_todd_bernoulli(k); }});
  for (long n = 1; n <= r.gs_n; ++n) cells.push_back({"GS-ITEM3", [n] { return check_gs_item3_harmonic(n); }});
  for (long n = 1; n <= r.drr_symbolic_n; ++n)
    for (long i = 1; i <= n + 1; ++i)
      cells.push_back({"EQ-REDUCTIONDRR", [n, i] { return check_reductiondrr_symbolic(n, i); }});
  for (long n = 1; n <= r.drr_family_n; ++n)
    for (long i = 1; i <= n + 1; ++i)
      for (long a = 1; a <= r.drr_family_a; ++a)
        for (long b = -r.drr_family_b; b <= r.drr_family_b; ++b)
          cells.push_back({"EQ-REDUCTIONDRR-FAMILY", [=] { return check_reductiondrr_family(n, i, a, b); }});
  for (long n = 1; n <= r.lemma_n; ++n)
    for (long i = 1; i <= n + 1; ++i) {
      for (long b = 0; b <= n + 1; ++b) {
        cells.push_back({"EQ-TEMP1", [=] { return check_temp1(n, i, b); }});
        cells.push_back({"EQ-TEMP4", [=] { return check_temp4(n, i, b); }});
        cells.push_back({"EQ-POLCOLLAPSE", [=] { return check_polarization_collapse(n, i, b); }});
      }
      cells.push_back({"EQ-VANISHING", [=] { return check_vanishing_structure(n, i); }});
    }
  for (long a = 0; a <= r.bern_collapse_a; ++a)
    if (a > r.bern_m) cells.push_back({"PROP-BERN-COLLAPSE", [a] { return check_bernoulli_collapse(a); }});

  const std::vector<std::pair<long, long>> lines{{1, 1}, {2, -1}, {0, 3}};
  const std::vector<std::pair<long, long>> auxiliaries{{1, 0}, {2, 1}};
  for (long n = 1; n <= r.composite_n; ++n)
    for (long i = 1; i <= n + 1; ++i) {
      for (auto line : lines)
        for (auto aux : auxiliaries)
          cells.push_back({"EQ-EXPLICIT-FAMILY", [=] { return check_explicit_drr_family(n, i, line, aux); }});
      for (auto line : lines)
        cells.push_back({"EQ-TEMP3-FAMILY", [=] { return check_temp3_family(n, i, line, {1, 2}, {2, 1}); }});
    }
}

inline void append_hrr(std::vector<Cell>& cells, const Ranges& r) {
  for (long n = 0; n <= r.hrr_proj_n; ++n)
    for (long d = -r.hrr_proj_d; d <= r.hrr_proj_d; ++d)
      cells.push_back({"HRR-PROJ", [=] {
                         std::vector<long> t{d};
                         return hrr_check(ModelSpace::projective(static_cast<int>(n)), t);
                       }});
  for (long n1 = 1; n1 < r.hrr_product_dim; ++n1)
    for (long n2 = 1; n1 + n2 <= r.hrr_product_dim; ++n2)
      for (long d1 = -r.hrr_product_d; d1 <= r.hrr_product_d; ++d1)
        for (long d2 = -r.hrr_product_d; d2 <= r.hrr_product_d; ++d2)
          cells.push_back({"HRR-PRODUCT", [=] {
                             std::vector<long> t{d1, d2};
                             return hrr_check(ModelSpace::product({static_cast<int>(n1), static_cast<int>(n2)}), t);
                           }});
  for (long n = 1; n <= r.hrr_hyper_n; ++n)
    for (long k = 1; k <= r.hrr_hyper_k; ++k)
      for (long d = -r.hrr_hyper_d; d <= r.hrr_hyper_d; ++d)
        cells.push_back({"HRR-HYPERSURFACE", [=] {
                           std::vector<long> t{d};
                           return hrr_check(ModelSpace::hypersurface(static_cast<int>(n), static_cast<int>(k)), t);
                         }});
}

/// Coefficient vectors satisfying the lambda condition for P^n: the
/// (n+2)-nd and (n+3)-rd finite differences, and shifted copies.
inline std::vector<std::pair<long, std::vector<long>>> lambda_witnesses(long n) {
  std::vector<std::pair<long, std::vector<long>>> out;
  for (long order = n + 2; order <= n + 3; ++order) {
    auto base = finite_difference_vector(order);
    for (long shift = 0; shift <= 2; ++shift) {
      std::vector<long> c(static_cast<std::size_t>(shift), 0);
      c.insert(c.end(), base.begin(), base.end());
      out.emplace_back(shift, std::move(c));
    }
  }
  return out;
}

inline void append_lambda(std::vector<Cell>& cells, const Ranges& r) {
  for (long n = 1; n <= r.lambda_n; ++n)
    for (const auto& [shift, c] : lambda_witnesses(n))
      for (long d = -r.lambda_d; d <= r.lambda_d; ++d)
        cells.push_back({"LAMBDA-RELATION", [=, c = c, shift = shift] { return check_lambda_relation(n, c, d, shift); }});
}

inline IdentityReport fiber_pushforward_cell(long index, const FiberConfig& cfg) {
  static const fiber::PolyFamily family = fiber::PolyFamily::parse("z^2 - s");
  auto samples = fiber::disk_samples({0, 0}, 1.0, cfg.pushforward_samples, 0x5eedULL);
  fiber::Complex s = samples[static_cast<std::size_t>(index)];
  fiber::Complex h = fiber::pushforward(family, fiber::TestFunction::named("z2"), s, cfg.solver);
  fiber::Complex expected = 2.0 * s;
  IdentityReport rep;
  rep.id = "FIBER-PUSHFORWARD";
  rep.params = {{"sample", index}};
  rep.lhs = detail::format_complex(h);
  rep.rhs = detail::format_complex(expected);
  rep.passed = std::abs(h - expected) <= cfg.pushforward_tolerance * std::max(1.0, std::abs(expected));
  rep.outcome = rep.passed ? Outcome::pass : Outcome::fail;
  return rep;
}

inline IdentityReport fiber_multiplicity_cell(const FiberConfig& cfg) {
  auto family = fiber::PolyFamily::parse("z^2 - s");
  auto m = fiber::multiplicity_constancy(family, {0, 0}, 2.0, {0, 0}, 1.0, cfg.pushforward_samples, cfg.solver);
  IdentityReport rep;
  rep.id = "FIBER-MULTIPLICITY";
  rep.params = {{"samples", cfg.pushforward_samples}};
  std::vector<Rational> counts;
  for (int c : m.counts) counts.emplace_back(c);
  rep.lhs = to_witness(counts);
  rep.rhs = to_witness(std::vector<Rational>(counts.size(), Rational(2)));
  rep.passed = !m.inconclusive && m.constant && m.value == 2;
  rep.outcome = m.inconclusive ? Outcome::inconclusive : (rep.passed ? Outcome::pass : Outcome::fail);
  return rep;
}

inline IdentityReport fiber_continuity_cell(const FiberConfig& cfg) {
  auto family = fiber::PolyFamily::parse("z^2 - s");
  const std::vector<double> radii{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625, 1e-3, 1e-4};
  auto rep_c = fiber::continuity_probe(family, fiber::TestFunction::named("z2"), {0, 0}, radii, 64,
                                       cfg.continuity_slack, cfg.solver);
  IdentityReport rep;
  rep.id = "FIBER-CONTINUITY";
  rep.params = {{"radii", static_cast<long>(radii.size())}};
  std::string osc = "[";
  for (std::size_t i = 0; i < rep_c.oscillation.size(); ++i)
    osc += (i ? ", " : "") + detail::format_double(rep_c.oscillation[i]);
  rep.lhs = osc + "]";
  rep.rhs = rep_c.non_increasing ? "non-increasing" : "increasing";
  rep.passed = rep_c.non_increasing;
  rep.outcome = rep.passed ? Outcome::pass : Outcome::fail;
  return rep;
}

inline void append_fiberint(std::vector<Cell>& cells, const FiberConfig& cfg) {
  for (long i = 0; i < cfg.pushforward_samples; ++i)
    cells.push_back({"FIBER-PUSHFORWARD", [i, cfg] { return fiber_pushforward_cell(i, cfg); }});
  cells.push_back({"FIBER-MULTIPLICITY", [cfg] { return fiber_multiplicity_cell(cfg); }});
  cells.push_back({"FIBER-CONTINUITY", [cfg] { return fiber_continuity_cell(cfg); }});
}

inline std::vector<Cell> build_suite(Suite suite, const Ranges& ranges, const FiberConfig& fiber_cfg = {}) {
  std::vector<Cell> cells;
  if (suite == Suite::all || suite == Suite::appendixA) append_appendix_a(cells, ranges);
  if (suite == Suite::all || suite == Suite::drr) append_drr(cells, ranges);
  if (suite == Suite::all || suite == Suite::hrr) append_hrr(cells, ranges);
  if (suite == Suite::all || suite == Suite::lambda) append_lambda(cells, ranges);
  if (suite == Suite::all || suite == Suite::fiberint) append_fiberint(cells, fiber_cfg);
  return cells;
}

/// Runs every cell on a pool of `threads` workers. The result is sorted by
/// (id, params) and does not depend on the schedule.
inline std::vector<IdentityReport> run_cells(const std::vector<Cell>& cells, unsigned threads) {
  std::vector<IdentityReport> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      auto start = std::chrono::steady_clock::now();
      IdentityReport rep;
      try {
        rep = cells[i].run();
      } catch (const fiber::SolverError& e) {
        rep.id = cells[i].id;
        rep.outcome = Outcome::solver_error;
        rep.lhs = e.what();
      } catch (const std::exception& e) {
        rep.id = cells[i].id;
        rep.outcome = Outcome::fail;
        rep.lhs = std::string("exception: ") + e.what();
      }
      rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      results[i] = std::move(rep);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(results.begin(), results.end());
  return results;
}

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
  std::size_t solver_errors = 0;

  /// 0 all pass, 1 any failure, 3 any solver error.
  int exit_status() const { return solver_errors ? 3 : (failed ? 1 : 0); }
};

inline Summary summarize(const std::vector<IdentityReport>& reports) {
  Summary s;
  for (const auto& r : reports) switch (r.outcome) {
    case Outcome::pass: ++s.passed; break;
    case Outcome::fail: ++s.failed; break;
    case Outcome::inconclusive: ++s.inconclusive; break;
    case Outcome::solver_error: ++s.solver_errors; break;
    }
  return s;
}

/// JSON array, one object per report, keys sorted. elapsed_ms is written
/// as 0 unless timings are requested, keeping the output reproducible.
inline nlohmann::json to_json(const std::vector<IdentityReport>& reports, bool timings = false) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json o;
    o["id"] = r.id;
    o["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) o["params"][k] = v;
    o["passed"] = r.passed;
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["elapsed_ms"] = timings ? r.elapsed_ms : 0;
    if (r.outcome == Outcome::inconclusive || r.outcome == Outcome::solver_error) o["outcome"] = to_string(r.outcome);
    arr.push_back(std::move(o));
  }
  return arr;
}

inline std::string format_params(const std::map<std::string, long>& params) {
  std::string s;
  for (const auto& [k, v] : params) s += (s.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return s;
}

} // namespace rrkernel
