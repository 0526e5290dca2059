#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace salpeter {

/// Large-r behaviour of a confining potential; only used to pick the box.
enum class Growth { linear, quadratic, sqrt_quadratic };

/// Central potential V(r) for the s-wave problem -u'' + V u = E u. V is only
/// ever evaluated at r > 0.
struct CentralPotential {
  std::function<double(double)> evaluator;
  std::string label;
  Growth growth = Growth::quadratic;

  double operator()(double r) const { return evaluator(r); }
};

CentralPotential linear_potential();
CentralPotential oscillator_potential();
/// sqrt(m^2 + r^2)
CentralPotential salpeter_potential(double mass);
/// sqrt(m^2 + r^2) - m, evaluated as r^2 / (sqrt(m^2 + r^2) + m).
CentralPotential shifted_salpeter_potential(double mass);
/// scale * V(r) + shift
CentralPotential affine(CentralPotential base, double scale, double shift);

struct GridConfig {
  double box_radius = 0.0;
  int points = 4000;  ///< interior points of the coarsest level
  int refinement_levels = 3;
  double target_tol = 1e-8;
};

struct EigenResult {
  double energy = 0.0;
  double error_estimate = 0.0;
  GridConfig grid_used;
  bool converged = false;
  /// Raw finite-difference eigenvalue on each level, coarse to fine.
  std::vector<double> level_energies;
};

class NonConfiningPotential : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eigensolver failure that still carries the best result obtained.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, EigenResult best) : std::runtime_error(what), best_(std::move(best)) {}
  const EigenResult& best() const { return best_; }

 private:
  EigenResult best_;
};

/// Lowest eigenvalue of the second-order finite-difference matrix on the
/// uniform grid r_i = i h, i = 1..n, h = R / (n + 1), with u(0) = u(R) = 0.
double finite_difference_ground_energy(const CentralPotential& potential, double box_radius, int points);

/// Ground state on the given grid with Richardson extrapolation in h^2 over
/// refinement_levels halvings of h. The error estimate is the change made by
/// the last extrapolation step.
EigenResult solve_ground_state(const CentralPotential& potential, const GridConfig& grid);

/// Smallest R with V(R) >= energy + margin.
double box_radius_for(const CentralPotential& potential, double energy, double margin = 25.0);

/// Picks R from a coarse estimate, then refines the grid until the error
/// estimate meets target_tol * max(1, |E|). Past the grid cap the best
/// result is returned with converged = false.
EigenResult auto_solve(const CentralPotential& potential, double target_tol = 1e-8);

}  // namespace salpeter
