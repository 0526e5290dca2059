// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "salpeter/bounds.hpp"
#include "salpeter/oracle.hpp"
#include "salpeter/pfunction.hpp"
#include "salpeter/radial_eigensolver.hpp"

using namespace salpeter;

namespace {

const double kMasses[] = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0};

// Largest (upper - lower) / (lower - N m) over N = 2..8, gamma = 1, recorded
// on the first run (both at N = 8). Checked with 1% headroom.
constexpr double kCoalescenceGapAt10 = 1.161382e-02;
constexpr double kCoalescenceGapAt1000 = 1.383224e-05;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Report {
  int failures = 0;

  void line(const std::string& name, const std::function<std::string(bool&)>& body) {
    bool ok = false;
    std::string detail;
    try {
      detail = body(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
  }
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

std::vector<std::vector<double>> run_csv(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"salpeter_bounds"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  if (cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err) != cli::kExitSuccess)
    throw std::runtime_error("command failed: " + err.str());
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream fields(line);
    for (std::string f; std::getline(fields, f, ',');) row.push_back(std::stod(f));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

int main() {
  Report report;

  report.line("e(0) reproduction", [](bool& ok) {
    const auto start = Clock::now();
    const double e = auto_solve(linear_potential(), 1e-8).energy;
    const double t = seconds_since(start);
    ok = std::abs(e - 2.33810741) <= 1e-6 && t < 1.0;
    return fmt("e(0)=%.12f |diff|=%.2e (tol 1e-6), %.3fs (limit 1s)", e, std::abs(e - 2.33810741), t);
  });

  report.line("oscillator sanity", [](bool& ok) {
    const double e = auto_solve(oscillator_potential(), 1e-10).energy;
    ok = std::abs(e - 3.0) <= 1e-8;
    return fmt("E=%.12f |diff|=%.2e (tol 1e-8)", e, std::abs(e - 3.0));
  });

  report.line("P range and monotonicity", [](bool& ok) {
    default_energy_table().clear();
    const auto start = Clock::now();
    int violations = 0;
    double previous = 0.0;
    for (double m : kMasses) {
      const double p = p_of_m(m);
      if (!(p > 1.3760 && p < 1.5)) ++violations;
      if (p < previous) ++violations;
      previous = p;
    }
    const double p1000 = p_of_m(1000.0);
    const double t = seconds_since(start);
    ok = violations == 0 && p1000 > 1.49 && t < 30.0;
    return fmt("violations=%.0f P(1000)=%.9f (>1.49), %.2fs (limit 30s)", violations, p1000, t);
  });

  report.line("defining-relation closure", [](bool& ok) {
    double worst = 0.0;
    for (double m : kMasses) {
      const double e = e_of_m(m);
      worst = std::max(worst, std::abs(e_via_min(m, p_of_m(m)) - e) / std::max(1.0, e));
    }
    ok = worst <= 1e-6;
    return fmt("max relative residual %.2e (tol 1e-6)", worst);
  });

  report.line("two-body exactness", [](bool& ok) {
    double worst = 0.0;
    for (double m : {0.0, 1.0, 10.0})
      for (double g : {0.5, 1.0, 2.0})
        worst = std::max(worst, std::abs(lower_bound({2, m, g}) / two_body_exact(m, g) - 1.0));
    ok = worst <= 1e-10;
    return fmt("max relative difference %.2e (tol 1e-10)", worst);
  });

  report.line("sandwich property", [](bool& ok) {
    int violations = 0;
    int cases = 0;
    for (int n = 2; n <= 8; ++n)
      for (double m : {0.0, 0.1, 1.0, 10.0, 100.0, 1000.0})
        for (double g : {0.5, 1.0, 2.0}) {
          ++cases;
          const SystemSpec sys{n, m, g};
          if (lower_bound(sys) > upper_bound(sys)) ++violations;
        }
    ok = violations == 0;
    return fmt("%.0f violations in %.0f systems", violations, cases);
  });

  report.line("nonrelativistic coalescence", [](bool& ok) {
    ok = true;
    double worst10 = 0.0;
    double worst1000 = 0.0;
    double worst_nr = 0.0;
    for (int n = 2; n <= 8; ++n) {
      double previous = INFINITY;
      for (double m : {10.0, 100.0, 1000.0}) {
        const SystemSpec sys{n, m, 1.0};
        const double lower = lower_bound(sys);
        const double upper = upper_bound(sys);
        const double gap = (upper - lower) / (lower - n * m);
        if (!(gap < previous)) ok = false;
        previous = gap;
        if (m == 10.0) worst10 = std::max(worst10, gap);
        if (m == 1000.0) {
          worst1000 = std::max(worst1000, gap);
          const double nr = nonrel_energy(sys);
          worst_nr = std::max({worst_nr, std::abs(lower - nr) / (nr - n * m), std::abs(upper - nr) / (nr - n * m)});
        }
      }
    }
    ok = ok && worst10 <= 1.01 * kCoalescenceGapAt10 && worst1000 <= 1.01 * kCoalescenceGapAt1000 && worst_nr < 1e-3;
    return fmt("max gap m=10: %.4e, m=1000: %.4e; max |E - E_nr|/excess at m=1000: %.2e", worst10, worst1000,
               worst_nr);
  });

  report.line("oracle agreement", [](bool& ok) {
    double worst = 0.0;
    for (double m : {0.0, 0.5, 1.0, 5.0, 50.0}) {
      const double e = e_of_m(m);
      worst = std::max(worst, std::abs(oracle::salpeter_basis_energy(m).energy - e) / std::max(1.0, e));
    }
    const double identity = oracle::lemma1_residual(256, 1.0);
    ok = worst <= 1e-5 && identity < 1e-10;
    return fmt("basis vs position space %.2e (tol 1e-5); pair kinetic identity residual %.2e (tol 1e-10)", worst, identity);
  });

  report.line("Gaussian-bound equivalence", [](bool& ok) {
    // five valid systems drawn once from N in 2..8, log10 m in [-2, 3], gamma in [0.2, 3]
    const SystemSpec systems[] = {{2, 0.0173, 0.61}, {4, 3.92, 2.47}, {5, 0.455, 1.13}, {7, 218.0, 0.29}, {8, 41.7, 1.86}};
    double worst = 0.0;
    for (const auto& sys : systems)
      worst = std::max(worst, std::abs(oracle::gaussian_upper_minimum(sys).energy / upper_bound(sys) - 1.0));
    ok = worst <= 1e-10;
    return fmt("max relative difference %.2e (tol 1e-10)", worst);
  });

  report.line("figure CSV reproduction", [](bool& ok) {
    default_energy_table().clear();
    const auto start = Clock::now();
    const auto f1 = run_csv({"figure1"});
    const auto f2 = run_csv({"figure2"});
    const auto f3 = run_csv({"figure3"});
    const double t = seconds_since(start);
    int violations = 0;
    for (std::size_t i = 1; i < f1.size(); ++i) {
      if (!(f1[i][1] < f1[i - 1][1])) ++violations;  // e - m decreasing
      if (!(f1[i][2] >= f1[i - 1][2])) ++violations;  // P increasing
    }
    for (std::size_t i = 0; i < f2.size(); ++i) {
      if (!(f2[i][2] <= f3[i][2] + 1e-8)) ++violations;  // constant P(0) below running P(mu)
      if (!(f3[i][2] <= f3[i][3])) ++violations;  // running lower below upper
      if (f2[i][3] != f3[i][3]) ++violations;
    }
    const bool sizes = f1.size() == 101 && f2.size() == 707 && f3.size() == 707;
    ok = violations == 0 && sizes && t < 120.0;
    return fmt("ordering violations=%.0f, ", violations) + (sizes ? "row counts ok, " : "row counts wrong, ") +
           fmt("%.2fs (limit 120s)", t);
  });

  std::printf("%s\n", report.failures == 0 ? "ALL ACCEPTANCE CHECKS PASSED" : "ACCEPTANCE FAILED");
  return report.failures == 0 ? 0 : 1;
}
