#include "salpeter/pfunction.hpp"

#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "salpeter/minimize.hpp"
#include "salpeter/radial_eigensolver.hpp"

namespace salpeter {

namespace {

void check_mass(double mass) {
  if (!(mass >= 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be finite and non-negative");
}

}  // namespace

double OneBodyEnergyTable::excess(double mass, double tol) {
  check_mass(mass);
  const std::pair<double, double> key{std::round(mass * 1e12), tol};
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }

  const EigenResult result = auto_solve(shifted_salpeter_potential(mass), tol);
  if (!result.converged) {
    std::ostringstream msg;
    msg << "e(m) did not converge for m=" << mass << " (error estimate " << result.error_estimate << ")";
    throw ConvergenceError(msg.str(), result);
  }

  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, result.energy).first->second;
}

std::size_t OneBodyEnergyTable::size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

void OneBodyEnergyTable::clear() {
  std::unique_lock lock(mutex_);
  cache_.clear();
}

OneBodyEnergyTable& default_energy_table() {
  static OneBodyEnergyTable table;
  return table;
}

double e_of_m(double mass, double tol) { return default_energy_table().energy(mass, tol); }

double p_from_excess(double mass, double excess) {
  check_mass(mass);
  if (!(excess > 0.0)) throw std::invalid_argument("p_from_excess: e(m) - m must be positive");
  const double e = mass + excess;
  const double q = std::sqrt(e * e + 3.0 * mass * mass);
  // Stationary kinetic energy s = (e + q) / 3 and
  // P = (s - m)(s + m) / sqrt(2 s), with q - 2m = (e^2 - m^2) / (q + 2m).
  const double s = (e + q) / 3.0;
  const double s_minus_m = (excess + excess * (2.0 * mass + excess) / (q + 2.0 * mass)) / 3.0;
  return s_minus_m * (s + mass) / std::sqrt(2.0 * s);
}

double p_from_energy(double mass, double energy) { return p_from_excess(mass, energy - mass); }

double p_of_m(double mass, double tol) { return p_from_excess(mass, default_energy_table().excess(mass, tol)); }

double e_via_min(double mass, double p) {
  check_mass(mass);
  if (!(p > 0.0)) throw std::invalid_argument("e_via_min: P must be positive");
  return minimize_two_term(1.0, mass, p * p, 1.0).value;
}

KineticParametrization kinetic_parametrization(double mass, double r, double tol) {
  if (!(r > 0.0)) throw std::invalid_argument("kinetic_parametrization: r must be positive");
  const double p = p_of_m(mass, tol);
  return {r, std::sqrt(mass * mass + (p / r) * (p / r)), r * r};
}

double e_nr(double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("e_nr: mass must be positive");
  return mass + 3.0 / std::sqrt(2.0 * mass);
}

}  // namespace salpeter
