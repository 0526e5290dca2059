#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "salpeter/bounds.hpp"
#include "salpeter/oracle.hpp"
#include "salpeter/pfunction.hpp"
#include "salpeter/radial_eigensolver.hpp"

namespace salpeter::cli {

namespace {

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Runs body, which returns the worst observed deviation; exceptions count as
// failures.
CheckResult check(std::string name, double tolerance, const std::function<double()>& body) {
  CheckResult r{std::move(name), false, 0.0, tolerance, {}};
  try {
    r.observed = body();
    r.passed = r.observed <= tolerance;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

const double kMasses[] = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0};

}  // namespace

std::vector<CheckResult> run_verification(double tol) {
  std::vector<CheckResult> out;

  out.push_back(check("linear potential ground state vs 2.33810741", 1e-6, [] {
    return std::abs(auto_solve(linear_potential(), 1e-8).energy - 2.33810741);
  }));

  out.push_back(check("oscillator ground state vs 3", 1e-8, [] {
    return std::abs(auto_solve(oscillator_potential(), 1e-10).energy - 3.0);
  }));

  out.push_back(check("oscillator-basis vs finite-difference e(m)", 1e-5, [tol] {
    double worst = 0.0;
    for (double m : {0.0, 0.5, 1.0, 5.0, 50.0}) {
      const auto basis = oracle::salpeter_basis_energy(m);
      worst = std::max(worst, relative(basis.energy, e_of_m(m, tol)));
    }
    return worst;
  }));

  out.push_back(check("pair kinetic identity spectral residual (256 points)", 1e-10,
                      [] { return oracle::lemma1_residual(256, 1.0); }));

  out.push_back(check("defining relation e_via_min(m, P(m)) = e(m)", 1e-6, [tol] {
    double worst = 0.0;
    for (double m : kMasses) worst = std::max(worst, relative(e_via_min(m, p_of_m(m, tol)), e_of_m(m, tol)));
    return worst;
  }));

  // observed = number of violations of 1.376 < P < 1.5 and monotonicity
  out.push_back(check("P(m) range and monotonicity", 0.0, [tol] {
    double violations = 0.0;
    double previous = 0.0;
    for (double m : kMasses) {
      const double p = p_of_m(m, tol);
      if (!(p > 1.3760 && p < kGaussianP)) violations += 1.0;
      if (p < previous) violations += 1.0;
      previous = p;
    }
    return violations;
  }));

  out.push_back(check("two-body lower bound equals exact energy", 1e-10, [tol] {
    double worst = 0.0;
    for (double m : {0.0, 1.0, 10.0})
      for (double g : {0.5, 1.0, 2.0})
        worst = std::max(worst, std::abs(lower_bound({2, m, g}, tol) / two_body_exact(m, g, tol) - 1.0));
    return worst;
  }));

  out.push_back(check("scaled e(mu) equals bound formula at P(mu)", 1e-6, [tol] {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n)
      for (double m : {0.0, 1.0, 10.0}) {
        const SystemSpec sys{n, m, 1.0};
        const double lower = lower_bound(sys, tol);
        worst = std::max(worst, std::abs(bound_formula(sys, p_of_m(mu_of(sys), tol)) / lower - 1.0));
      }
    return worst;
  }));

  out.push_back(check("direct momentum-space reduced operator equals lower bound", 1e-6, [tol] {
    double worst = 0.0;
    for (int n : {2, 3, 5, 8})
      for (double m : {0.0, 1.0, 10.0}) {
        const SystemSpec sys{n, m, 1.0};
        worst = std::max(worst, std::abs(oracle::reduced_operator_energy(sys, tol) / lower_bound(sys, tol) - 1.0));
      }
    return worst;
  }));

  out.push_back(check("Gaussian trial minimum equals upper bound", 1e-10, [] {
    double worst = 0.0;
    for (const SystemSpec& sys : {SystemSpec{2, 0.0, 1.0}, SystemSpec{3, 1.0, 1.0}, SystemSpec{5, 0.3, 2.0},
                                  SystemSpec{8, 10.0, 0.5}, SystemSpec{4, 100.0, 1.5}})
      worst = std::max(worst, std::abs(oracle::gaussian_upper_minimum(sys).energy / upper_bound(sys) - 1.0));
    return worst;
  }));

  out.push_back(check("sandwich lower <= upper (violations)", 0.0, [tol] {
    double violations = 0.0;
    for (int n = 2; n <= 8; ++n)
      for (double m : {0.0, 0.1, 1.0, 10.0, 100.0, 1000.0})
        for (double g : {0.5, 1.0, 2.0}) {
          const SystemSpec sys{n, m, g};
          if (lower_bound(sys, tol) > upper_bound(sys)) violations += 1.0;
        }
    return violations;
  }));

  // observed = largest (reduced - trial) over sampled alpha; must stay <= 0
  out.push_back(check("Gaussian trial energies lie above the reduced operator", 0.0, [tol] {
    double worst = -1e300;
    for (const SystemSpec& sys : {SystemSpec{2, 1.0, 1.0}, SystemSpec{4, 0.0, 1.0}, SystemSpec{6, 5.0, 0.5}}) {
      const double reduced = oracle::reduced_operator_energy(sys, tol);
      for (double alpha : {0.05, 0.2, 0.5, 1.0, 2.0, 5.0, 20.0})
        worst = std::max(worst, reduced - oracle::gaussian_upper_expectation(sys, {alpha}));
    }
    return worst;
  }));

  return out;
}

}  // namespace salpeter::cli
