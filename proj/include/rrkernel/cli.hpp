// rrkernel command line: verify | table | fiber.
#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "battery.hpp"
#include "combin.hpp"
#include "fiberint.hpp"
#include "identities.hpp"
#include "series.hpp"

namespace rrkernel::cli {

enum ExitCode : int { ok = 0, identity_failed = 1, usage = 2, solver_error = 3 };

struct RunConfig {
  std::string suite = "all";
  long n_max = 6;
  std::string json_out;
  unsigned threads = 1;
  std::string tau_group = "1e-6";
  std::string residual = "1e-12";
  bool timings = false;
  bool quiet = false;
};

class UsageError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline double parse_positive(const std::string& text, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": not a number '" + text + "'");
  }
  if (used != text.size() || !(v > 0) || !std::isfinite(v))
    throw UsageError(std::string(what) + ": expected a positive decimal, got '" + text + "'");
  return v;
}

inline fiber::SolverOptions solver_options(const std::string& tau_group, const std::string& residual) {
  fiber::SolverOptions opt;
  opt.tau_group = parse_positive(tau_group, "--tau-group");
  opt.residual = parse_positive(residual, "--residual");
  return opt;
}

/// Runs a battery and returns the reports; also used by the acceptance test.
inline std::vector<IdentityReport> run_battery(const RunConfig& cfg) {
  if (cfg.n_max < 1) throw UsageError("--n-max must be >= 1");
  if (cfg.threads < 1) throw UsageError("--threads must be >= 1");
  Suite suite;
  try {
    suite = parse_suite(cfg.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  FiberConfig fc;
  fc.solver = solver_options(cfg.tau_group, cfg.residual);
  return run_cells(build_suite(suite, Ranges::for_n_max(cfg.n_max), fc), cfg.threads);
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  auto reports = run_battery(cfg);
  for (const auto& r : reports) {
    if (cfg.quiet && r.outcome == Outcome::pass) continue;
    std::string tag = r.outcome == Outcome::pass           ? "PASS"
                      : r.outcome == Outcome::fail         ? "FAIL"
                      : r.outcome == Outcome::inconclusive ? "INCONCLUSIVE"
                                                           : "SOLVER-ERROR";
    out << tag << ' ' << r.id << ' ' << format_params(r.params);
    if (r.outcome != Outcome::pass) out << " lhs=" << r.lhs << " rhs=" << r.rhs;
    out << '\n';
  }
  auto s = summarize(reports);
  out << "summary: " << reports.size() << " cells, " << s.passed << " passed, " << s.failed << " failed, "
      << s.inconclusive << " inconclusive, " << s.solver_errors << " solver errors\n";
  if (!cfg.json_out.empty()) {
    std::ofstream f(cfg.json_out, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + cfg.json_out + "' for writing");
    f << to_json(reports, cfg.timings).dump(2) << '\n';
  }
  return s.exit_status();
}

inline std::string table_csv(const std::string& what, long n) {
  auto bound = [&](long max) {
    if (n < 0 || n > max)
      throw UsageError("table " + what + ": n must be in [0, " + std::to_string(max) + "]");
  };
  std::ostringstream os;
  if (what == "bernoulli") {
    bound(24);
    os << "k,value\n";
    for (long k = 0; k <= n; ++k) os << k << ',' << bernoulli(k) << '\n';
  } else if (what == "todd") {
    bound(24);
    Series td = todd_series(n);
    os << "k,value\n";
    for (long k = 0; k <= n; ++k) os << k << ',' << td[k] << '\n';
  } else if (what == "vandermonde-inverse") {
    bound(12);
    const QMatrix& a = inverse_vandermonde(n);
    os << "row";
    for (long j = 0; j <= n; ++j) os << ",c" << j;
    os << '\n';
    for (long i = 0; i <= n; ++i) {
      os << i;
      for (long j = 0; j <= n; ++j) os << ',' << a(i, j);
      os << '\n';
    }
  } else if (what == "interp") {
    bound(24);
    os << "b,j,value\n";
    for (long b = 0; b <= n; ++b) {
      auto c = interp_coeffs(b);
      for (long j = 0; j <= b; ++j) os << b << ',' << j << ',' << c.values[static_cast<std::size_t>(j)] << '\n';
    }
  } else if (what == "explicit-drr") {
    if (n < 1 || n > 12) throw UsageError("table explicit-drr: n must be in [1, 12]");
    os << explicit_drr_csv(explicit_drr_expansion(n));
  } else {
    throw UsageError("unknown table '" + what + "' (bernoulli, vandermonde-inverse, todd, interp, explicit-drr)");
  }
  return os.str();
}

inline int cmd_table(const std::string& what, long n, std::ostream& out) {
  out << table_csv(what, n);
  return ok;
}

inline double parse_double(const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw UsageError("not a number: '" + text + "'");
  return v;
}

/// "x" or "x,y" for x + y i.
inline fiber::Complex parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text), 0};
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

struct FiberArgs {
  std::string family;
  std::string g = "z";
  std::string center = "0";
  std::vector<double> radii{0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
  int samples = 64;
  std::string disk_center = "0";
  double disk_radius = 0;  // 0: derived from the root bound at the center
  std::string tau_group = "1e-6";
  std::string residual = "1e-12";
};

inline int cmd_fiber(const FiberArgs& args, std::ostream& out) {
  fiber::PolyFamily family = [&] {
    try {
      return fiber::PolyFamily::parse(args.family);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("family: ") + e.what());
    }
  }();
  if (family.degree() < 1) throw UsageError("family: need degree >= 1 in z");
  fiber::TestFunction g = [&] {
    try {
      return fiber::TestFunction::named(args.g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (args.radii.empty()) throw UsageError("--radii: need at least one radius");
  for (std::size_t i = 0; i < args.radii.size(); ++i)
    if (!(args.radii[i] > 0) || (i && !(args.radii[i] < args.radii[i - 1])))
      throw UsageError("--radii: expected strictly decreasing positive radii");
  if (args.samples < 1) throw UsageError("--samples must be >= 1");
  auto opt = solver_options(args.tau_group, args.residual);
  fiber::Complex center = parse_complex(args.center);
  fiber::Complex disk_center = parse_complex(args.disk_center);

  auto cont = fiber::continuity_probe(family, g, center, args.radii, args.samples, 1e-8, opt);
  out << "radius,oscillation\n";
  char buf[96];
  for (std::size_t i = 0; i < cont.radii.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g,%.12e\n", cont.radii[i], cont.oscillation[i]);
    out << buf;
  }
  out << "non_increasing," << (cont.non_increasing ? "true" : "false") << '\n';

  double disk_radius = args.disk_radius;
  if (!(disk_radius > 0)) {
    double bound = 0;
    for (const auto& p : fiber::fiber_at(family, center, opt).points)
      bound = std::max(bound, std::abs(p.value - disk_center));
    disk_radius = 2 * bound + 1;
  }
  auto mult = fiber::multiplicity_constancy(family, disk_center, disk_radius, center, args.radii.front(),
                                            args.samples, opt);
  std::snprintf(buf, sizeof buf, "%.6g", disk_radius);
  out << "multiplicity,disk_radius=" << buf << ",value=" << mult.value
      << ",constant=" << (mult.constant ? "true" : "false")
      << (mult.inconclusive ? ",inconclusive" : "") << '\n';
  if (mult.inconclusive) return cont.non_increasing ? ok : identity_failed;
  return cont.non_increasing && mult.constant ? ok : identity_failed;
}

/// Full command line; returns the exit status.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rrkernel: exact Riemann-Roch identity batteries and fibre-integration probes", "rrkernel"};
  app.require_subcommand(1);

  RunConfig vcfg;
  auto* verify = app.add_subcommand("verify", "run an identity battery");
  verify->add_option("--suite", vcfg.suite, "all, appendixA, drr, hrr, lambda, fiberint")
      ->check(CLI::IsMember({"all", "appendixA", "drr", "hrr", "lambda", "fiberint"}));
  verify->add_option("--n-max", vcfg.n_max, "largest dimension n in the sweep");
  verify->add_option("--json", vcfg.json_out, "write the report array to this path");
  verify->add_option("--threads", vcfg.threads, "worker threads");
  verify->add_option("--tau-group", vcfg.tau_group, "cluster tolerance relative to the root scale");
  verify->add_option("--residual", vcfg.residual, "relative residual acceptance");
  verify->add_flag("--timings", vcfg.timings, "record elapsed_ms in the JSON output");
  verify->add_flag("--quiet", vcfg.quiet, "print only non-passing cells and the summary");

  std::string table_what;
  long table_n = 0;
  auto* table = app.add_subcommand("table", "print a CSV table of exact values");
  table->add_option("what", table_what, "bernoulli, vandermonde-inverse, todd, interp, explicit-drr")->required();
  table->add_option("n", table_n, "size")->required();

  FiberArgs fargs;
  auto* fib = app.add_subcommand("fiber", "continuity and multiplicity probes of a polynomial family");
  fib->add_option("family", fargs.family, "polynomial in z with coefficients polynomial in s")->required();
  fib->add_option("--g", fargs.g, "test function: z, z2, abs2, re, const, poly:c0,c1,...");
  fib->add_option("--center", fargs.center, "parameter center, x or x,y");
  fib->add_option("--radii", fargs.radii, "strictly decreasing probe radii")->delimiter(',');
  fib->add_option("--samples", fargs.samples, "samples per circle and for the multiplicity probe");
  fib->add_option("--disk-center", fargs.disk_center, "center of the counting disk in z");
  fib->add_option("--disk-radius", fargs.disk_radius, "radius of the counting disk in z");
  fib->add_option("--tau-group", fargs.tau_group, "cluster tolerance relative to the root scale");
  fib->add_option("--residual", fargs.residual, "relative residual acceptance");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, r;
    int code = app.exit(e, o, r);
    out << o.str();
    err << r.str();
    return code == 0 ? ok : usage;
  }

  try {
    if (verify->parsed()) return cmd_verify(vcfg, out);
    if (table->parsed()) return cmd_table(table_what, table_n, out);
    if (fib->parsed()) return cmd_fiber(fargs, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const fiber::SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return solver_error;
  }
  return usage;
}

} // namespace rrkernel::cli
