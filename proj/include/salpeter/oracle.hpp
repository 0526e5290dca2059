#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "salpeter/bounds.hpp"

namespace salpeter::oracle {

/// l = 0 harmonic-oscillator basis for the momentum-space route.
struct BasisConfig {
  int size = 40;
  /// Oscillator length b; <= 0 selects sqrt(2/3) r* with r* the minimizer of
  /// the P = 3/2 one-body relation (the optimal Gaussian).
  double scale = 0.0;
  /// Minimum number of momentum quadrature nodes.
  int quadrature_points = 200;
  /// The basis is doubled until successive energies agree to this tolerance.
  double target_tol = 1e-7;
  int max_size = 640;
};

struct BasisEigenResult {
  double energy = 0.0;
  double error_estimate = 0.0;
  BasisConfig basis_used;  ///< size is the final (largest) basis
  bool converged = false;
  std::vector<int> sizes;
  std::vector<double> energies;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lowest eigenvalue of sqrt(m^2 + p^2) + r^2 for a single basis size.
/// r^2 uses its exact tridiagonal matrix; the kinetic matrix is built by
/// composite Gauss-Legendre quadrature in momentum space.
double salpeter_basis_energy_fixed(double mass, const BasisConfig& basis);

/// Same, with basis-size doubling from basis.size until converged.
BasisEigenResult salpeter_basis_energy(double mass, const BasisConfig& basis = {});

/// Oscillator length used when BasisConfig::scale is not set.
double default_basis_scale(double mass);

/// Matrix of an arbitrary radial momentum function f(p) (with measure
/// p^2 dp) in the basis, row-major size x size. Entries use the
/// momentum-space phase convention, i.e. without the (-1)^(n+n') factor that
/// relates them to the position-space functions. Exposed for testing.
std::vector<double> momentum_operator_matrix(int size, double scale, int quadrature_points,
                                             const std::function<double(double)>& f);

struct GaussianComponent {
  double amplitude = 1.0;
  double center = 0.0;
  double width = 1.0;
};

/// Relative L2 difference between sqrt(1 - (d/dx - d/dy)^2) Psi and
/// sqrt(1 - d^2/dx^2) Psi for y-independent Psi(x, y) = psi(x), psi a sum of
/// Gaussians, both applied as Fourier multipliers on an n x n periodic grid.
/// The box half-width is 12 times the widest component plus the largest
/// centre offset. Throws std::invalid_argument when psi is under-resolved
/// (spectral tail mass above 1e-12) or n is not a power of two >= 64.
double lemma1_residual(int grid_points, const std::vector<GaussianComponent>& profile);
double lemma1_residual(int grid_points, double trial_width);

struct GaussianTrial {
  double alpha = 1.0;
};

/// Gaussian trial energy with the Jensen estimate of the kinetic term:
/// N sqrt(m^2 + (2(N-1)/N)(3 alpha / 2)) + (N(N-1)/2) gamma (3 / (2 alpha)).
double gaussian_upper_expectation(const SystemSpec& sys, GaussianTrial trial);

struct GaussianMinimum {
  double alpha = 0.0;
  double energy = 0.0;
};

/// Minimum over alpha, found by Brent's method in log(alpha).
GaussianMinimum gaussian_upper_minimum(const SystemSpec& sys);

/// Ground energy of N sqrt(m^2 + (2(N-1)/N) p^2) + (N(N-1)/2) gamma r^2 from
/// a direct radial solve in momentum space, where r^2 acts as -Laplacian.
double reduced_operator_energy(const SystemSpec& sys, double tol = kDefaultTolerance);

}  // namespace salpeter::oracle
