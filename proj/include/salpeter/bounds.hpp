#pragma once

#include <stdexcept>

#include "salpeter/pfunction.hpp"

namespace salpeter {

/// N identical bosons of mass m with pair coupling gamma |r_i - r_j|^2.
struct SystemSpec {
  int particles = 2;
  double mass = 0.0;
  double coupling = 1.0;

  void validate() const;
};

/// One-body problem beta * sqrt(m^2 + lambda p^2) + gamma r^2.
struct ScaledOneBodySpec {
  double mass = 0.0;
  double beta = 1.0;
  double coupling = 1.0;
  double lambda = 1.0;

  void validate() const;
};

struct EnergyBounds {
  double lower = 0.0;
  double upper = 0.0;
  double p_lower = 0.0;  ///< P(mu)
  double p_upper = kGaussianP;
  double mu = 0.0;
};

/// Raised when the computed lower bound exceeds the upper bound.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// min over r > 0 of N sqrt(m^2 + 2(N-1)P^2 / (N r^2)) + N(N-1) gamma r^2 / 2.
double bound_formula(const SystemSpec& sys, double p);

/// Mass argument of the running P: m (N / (gamma (N-1)^2))^(1/3).
double mu_of(const SystemSpec& sys);

/// (N^2 (N-1)^2 gamma)^(1/3) e(mu); exact for N = 2.
double lower_bound(const SystemSpec& sys, double tol = kDefaultTolerance);

/// bound_formula with the Gaussian constant P = 3/2.
double upper_bound(const SystemSpec& sys);

/// (4 gamma)^(1/3) e(m (2/gamma)^(1/3))
double two_body_exact(double mass, double coupling, double tol = kDefaultTolerance);

/// Scaling law (beta^2 gamma lambda)^(1/3) e(m (beta / (gamma lambda))^(1/3)).
double scaled_one_body_energy(const ScaledOneBodySpec& spec, double tol = kDefaultTolerance);

/// min over r > 0 of beta sqrt(m^2 + lambda (P/r)^2) + gamma r^2.
double scaled_one_body_min(const ScaledOneBodySpec& spec, double p);

/// The one-body spec whose ground energy is the N-body lower bound:
/// beta = N, lambda = 2(N-1)/N, gamma -> N(N-1)gamma/2.
ScaledOneBodySpec reduced_one_body(const SystemSpec& sys);

/// Exact nonrelativistic energy N m + 3 sqrt(gamma / 2m) sqrt(N) (N-1).
double nonrel_energy(const SystemSpec& sys);

EnergyBounds bounds_pair(const SystemSpec& sys, double tol = kDefaultTolerance);

}  // namespace salpeter
