#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <utility>

namespace salpeter {

inline constexpr double kDefaultTolerance = 1e-8;
/// Representation constant of the Gaussian trial function; the m -> infinity
/// limit of P(m).
inline constexpr double kGaussianP = 1.5;
/// Published lower limit of P(m), truncated to three decimals.
inline constexpr double kPublishedLowerP = 1.376;

/// Effective kinetic-potential point: mean kinetic energy s = sqrt(m^2 +
/// (P(m)/r)^2) paired with h_eff = r^2.
struct KineticParametrization {
  double r = 0.0;
  double s = 0.0;
  double h_eff = 0.0;
};

/// Memo table for the one-body energy e(m), the lowest eigenvalue of
/// -Delta + sqrt(m^2 + r^2). Entries store e(m) - m, solved directly on the
/// shifted potential so that the excess stays accurate at large m.
///
/// get-or-compute is linearizable; two threads racing on the same key may
/// both solve, and the first insert wins.
class OneBodyEnergyTable {
 public:
  /// e(m) - m. Throws ConvergenceError if the solver misses tol.
  double excess(double mass, double tol = kDefaultTolerance);
  double energy(double mass, double tol = kDefaultTolerance) { return mass + excess(mass, tol); }

  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<double, double>, double> cache_;
};

/// Process-wide table used by the free functions below.
OneBodyEnergyTable& default_energy_table();

double e_of_m(double mass, double tol = kDefaultTolerance);

/// P(m) from the closed-form inversion of the minimization relation, evaluated
/// from the excess e - m to avoid the 2e - sqrt(e^2 + 3m^2) cancellation.
double p_from_excess(double mass, double excess);
double p_from_energy(double mass, double energy);
double p_of_m(double mass, double tol = kDefaultTolerance);

/// min over r > 0 of sqrt(m^2 + (P/r)^2) + r^2.
double e_via_min(double mass, double p);

KineticParametrization kinetic_parametrization(double mass, double r, double tol = kDefaultTolerance);

/// Nonrelativistic asymptote m + 3 / sqrt(2m); m must be positive.
double e_nr(double mass);

}  // namespace salpeter
