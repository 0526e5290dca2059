#include "salpeter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "salpeter/minimize.hpp"

namespace salpeter {

void SystemSpec::validate() const {
  if (particles < 2) throw std::invalid_argument("SystemSpec: need N >= 2");
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("SystemSpec: mass must be >= 0");
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw std::invalid_argument("SystemSpec: coupling must be > 0");
}

void ScaledOneBodySpec::validate() const {
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("ScaledOneBodySpec: mass must be >= 0");
  if (!(beta > 0.0) || !(coupling > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("ScaledOneBodySpec: beta, gamma and lambda must be positive");
}

double bound_formula(const SystemSpec& sys, double p) {
  sys.validate();
  if (!(p > 0.0)) throw std::invalid_argument("bound_formula: P must be positive");
  const double n = sys.particles;
  return minimize_two_term(n, sys.mass, 2.0 * (n - 1.0) * p * p / n, n * (n - 1.0) * sys.coupling / 2.0).value;
}

double mu_of(const SystemSpec& sys) {
  sys.validate();
  const double n = sys.particles;
  return sys.mass * std::cbrt(n / (sys.coupling * (n - 1.0) * (n - 1.0)));
}

double lower_bound(const SystemSpec& sys, double tol) {
  sys.validate();
  const double n = sys.particles;
  return std::cbrt(n * n * (n - 1.0) * (n - 1.0) * sys.coupling) * e_of_m(mu_of(sys), tol);
}

double upper_bound(const SystemSpec& sys) { return bound_formula(sys, kGaussianP); }

double two_body_exact(double mass, double coupling, double tol) {
  SystemSpec{2, mass, coupling}.validate();
  return std::cbrt(4.0 * coupling) * e_of_m(mass * std::cbrt(2.0 / coupling), tol);
}

double scaled_one_body_energy(const ScaledOneBodySpec& spec, double tol) {
  spec.validate();
  const double gl = spec.coupling * spec.lambda;
  return std::cbrt(spec.beta * spec.beta * gl) * e_of_m(spec.mass * std::cbrt(spec.beta / gl), tol);
}

double scaled_one_body_min(const ScaledOneBodySpec& spec, double p) {
  spec.validate();
  if (!(p > 0.0)) throw std::invalid_argument("scaled_one_body_min: P must be positive");
  return minimize_two_term(spec.beta, spec.mass, spec.lambda * p * p, spec.coupling).value;
}

ScaledOneBodySpec reduced_one_body(const SystemSpec& sys) {
  sys.validate();
  const double n = sys.particles;
  return {sys.mass, n, n * (n - 1.0) * sys.coupling / 2.0, 2.0 * (n - 1.0) / n};
}

double nonrel_energy(const SystemSpec& sys) {
  sys.validate();
  if (!(sys.mass > 0.0)) throw std::invalid_argument("nonrel_energy: mass must be positive");
  const double n = sys.particles;
  return n * sys.mass + 3.0 * std::sqrt(sys.coupling / (2.0 * sys.mass)) * std::sqrt(n) * (n - 1.0);
}

EnergyBounds bounds_pair(const SystemSpec& sys, double tol) {
  EnergyBounds b;
  b.mu = mu_of(sys);
  b.p_lower = p_of_m(b.mu, tol);
  b.p_upper = kGaussianP;
  b.lower = lower_bound(sys, tol);
  b.upper = upper_bound(sys);
  if (b.lower > b.upper + 1e-9 * std::max(1.0, b.upper)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "lower bound " << b.lower << " exceeds upper bound " << b.upper << " for N=" << sys.particles
        << " m=" << sys.mass << " gamma=" << sys.coupling;
    throw InternalConsistencyError(msg.str());
  }
  return b;
}

}  // namespace salpeter
