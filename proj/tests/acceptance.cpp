// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <unistd.h>

#include <rrkernel/battery.hpp>
#include <rrkernel/cli.hpp>
#include <rrkernel/series.hpp>

using namespace rrkernel;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail = {}) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<Cell> select(const std::vector<Cell>& cells, const std::set<std::string>& ids) {
  std::vector<Cell> out;
  for (const auto& c : cells)
    if (ids.count(c.id)) out.push_back(c);
  return out;
}

struct Batch {
  std::vector<IdentityReport> reports;
  Summary summary;
  double seconds = 0;

  bool all_passed() const { return !reports.empty() && summary.passed == reports.size(); }

  const IdentityReport* find(const std::string& id, const std::map<std::string, long>& params) const {
    for (const auto& r : reports)
      if (r.id == id && r.params == params) return &r;
    return nullptr;
  }

  std::string detail() const {
    std::ostringstream os;
    os << reports.size() << " cells, " << summary.failed << " failed, " << summary.inconclusive << " inconclusive, "
       << summary.solver_errors << " solver errors, ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", seconds);
    os << buf;
    for (const auto& r : reports)
      if (r.outcome != Outcome::pass) {
        os << "; first failure " << r.id << " " << format_params(r.params) << " lhs=" << r.lhs << " rhs=" << r.rhs;
        break;
      }
    return os.str();
  }
};

Batch run(const std::vector<Cell>& cells, unsigned threads = 1) {
  auto start = std::chrono::steady_clock::now();
  Batch b;
  b.reports = run_cells(cells, threads);
  b.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  b.summary = summarize(b.reports);
  return b;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

} // namespace

int main() {
  const Ranges ranges;
  std::vector<Cell> cells;
  append_appendix_a(cells, ranges);
  append_drr(cells, ranges);
  append_hrr(cells, ranges);
  append_lambda(cells, ranges);

  {
    auto b = run(select(cells, {"PROP-VAND-DET", "PROP-VAND-ROW", "PROP-BINOM1", "PROP-A", "PROP-PARTPOL",
                                "PROP-POWERSUM", "PROP-BERN-1", "PROP-BERN-2", "PROP-BERN-3", "PROP-BERN-COLLAPSE"}));
    report(1, b.all_passed() && b.seconds < 60, "combinatorial identities (appendixA suite), single-threaded under 60 s", b.detail());
  }
  {
    auto b = run(select(cells, {"TODD-BERNOULLI"}));
    bool pinned = todd_series(4)[4] == Rational(-1, 720);
    report(2, b.all_passed() && b.reports.size() == 21 && pinned, "Todd coefficients equal B_k/k! for k <= 20",
           b.detail() + ", Td_4 = " + todd_series(4)[4].str());
  }
  {
    auto b = run(select(cells, {"HRR-PROJ", "HRR-PRODUCT", "HRR-HYPERSURFACE"}));
    auto* pinned = b.find("HRR-PROJ", {{"n1", 2}, {"d1", 3}});
    bool ok = pinned && pinned->lhs == "10" && pinned->rhs == "10";
    report(3, b.all_passed() && ok, "HRR against the Euler-characteristic oracle",
           b.detail() + ", P2/O(3): " + (pinned ? pinned->lhs + " = " + pinned->rhs : "missing"));
  }
  {
    auto b = run(select(cells, {"LAMBDA-RELATION"}));
    auto* witness = b.find("LAMBDA-RELATION", {{"n", 1}, {"d", 1}, {"len", 4}, {"shift", 0}});
    Rational direct;
    const long c[] = {1, -3, 3, -1};
    for (long i = 0; i < 4; ++i) direct += Rational(c[i]) * euler_characteristic_projective(1, i);
    bool ok = witness && witness->lhs == "0" && direct.is_zero() && finite_difference_vector(3) == std::vector<long>{1, -3, 3, -1};
    report(4, b.all_passed() && ok, "lambda-relation shadow on P^n", b.detail() + ", n=1 witness sum " + direct.str());
  }
  {
    auto b = run(select(cells, {"EQ-REDUCTIONDRR", "EQ-REDUCTIONDRR-FAMILY"}));
    auto* pinned = b.find("EQ-REDUCTIONDRR-FAMILY", {{"n", 2}, {"i", 1}, {"a", 1}, {"b", 1}});
    bool ok = pinned && pinned->lhs == "1" && pinned->rhs == "1";
    report(5, b.all_passed() && ok, "DRR inversion, symbolic and on P^n x P^1",
           b.detail() + ", pinned (2,1,1,1): " + (pinned ? pinned->lhs + " = " + pinned->rhs : "missing"));
  }
  {
    auto b = run(select(cells, {"EQ-TEMP1", "EQ-TEMP4", "EQ-POLCOLLAPSE", "EQ-VANISHING", "PROP-BERN-COLLAPSE"}));
    long collapse = 0;
    for (const auto& r : b.reports) collapse += r.id == "PROP-BERN-COLLAPSE";
    report(6, b.all_passed() && collapse == 13, "lemma identities over n <= 8", b.detail());
  }
  {
    Rational harmonic = gs_constant_item3(1).harmonic_part;
    Rational x1 = r_genus(3).rational_part[1];
    bool ok = harmonic == Rational(5, 12) && x1 == Rational(-1, 12);
    report(7, ok, "series constants", "harmonic_part(1) = " + harmonic.str() + ", R-genus x^1 = " + x1.str());
  }
  {
    std::vector<Cell> fiber_cells;
    append_fiberint(fiber_cells, FiberConfig{});
    auto b = run(fiber_cells);
    long pushforward = 0;
    for (const auto& r : b.reports) pushforward += r.id == "FIBER-PUSHFORWARD" && r.outcome == Outcome::pass;
    report(8, b.all_passed() && pushforward == 100 && b.seconds < 10, "fibre push-forward of z^2 - s", b.detail());
  }
  {
    auto dir = std::filesystem::temp_directory_path() / ("rrkernel-accept-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    std::ostringstream sink;
    cli::RunConfig cfg;
    cfg.quiet = true;
    cfg.threads = 1;
    cfg.json_out = (dir / "t1.json").string();
    int s1 = cli::cmd_verify(cfg, sink);
    cfg.threads = 4;
    cfg.json_out = (dir / "t4.json").string();
    int s4 = cli::cmd_verify(cfg, sink);
    std::string a = slurp(dir / "t1.json"), b = slurp(dir / "t4.json");
    std::filesystem::remove_all(dir);
    report(9, !a.empty() && a == b && s1 == 0 && s4 == 0, "verify --suite all JSON identical for 1 and 4 threads",
           std::to_string(a.size()) + " bytes");
  }

  std::cout << (failures ? "acceptance: FAILED" : "acceptance: all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
