#include "salpeter/radial_eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "salpeter/tridiagonal.hpp"

namespace salpeter {

namespace {

constexpr int kRoughPoints = 400;
constexpr int kDefaultBasePoints = 4000;
constexpr int kMaxBasePoints = 64000;
constexpr double kBoxMargin = 25.0;
constexpr double kMaxBoxMargin = 400.0;

void validate(const GridConfig& grid) {
  if (!(grid.box_radius > 0.0) || !std::isfinite(grid.box_radius))
    throw std::invalid_argument("GridConfig: box radius must be positive");
  if (grid.points < 16) throw std::invalid_argument("GridConfig: need at least 16 points");
  if (grid.refinement_levels < 1 || grid.refinement_levels > 5)
    throw std::invalid_argument("GridConfig: refinement_levels must be in [1, 5]");
  if (!(grid.target_tol > 0.0)) throw std::invalid_argument("GridConfig: target_tol must be positive");
}

// Increments of V over successive doublings of r must not shrink faster than
// geometrically with ratio 3/4; rules out potentials that level off (Coulomb).
void check_confining(const CentralPotential& potential, double r) {
  double v[4];
  for (int k = 0; k < 4; ++k) {
    v[k] = potential(r * static_cast<double>(1 << k));
    if (!std::isfinite(v[k])) throw NonConfiningPotential("potential '" + potential.label + "' is not finite");
  }
  const double d1 = v[1] - v[0];
  const double d2 = v[2] - v[1];
  const double d3 = v[3] - v[2];
  if (!(d1 > 0.0) || d2 < 0.75 * d1 || d3 < 0.75 * d2)
    throw NonConfiningPotential("potential '" + potential.label + "' does not grow without bound");
}

}  // namespace

CentralPotential linear_potential() {
  return {[](double r) { return r; }, "r", Growth::linear};
}

CentralPotential oscillator_potential() {
  return {[](double r) { return r * r; }, "r^2", Growth::quadratic};
}

CentralPotential salpeter_potential(double mass) {
  if (!(mass >= 0.0)) throw std::invalid_argument("salpeter_potential: mass must be non-negative");
  const double m2 = mass * mass;
  return {[m2](double r) { return std::sqrt(m2 + r * r); }, "sqrt(m^2+r^2), m=" + std::to_string(mass),
          Growth::sqrt_quadratic};
}

CentralPotential shifted_salpeter_potential(double mass) {
  if (!(mass >= 0.0)) throw std::invalid_argument("shifted_salpeter_potential: mass must be non-negative");
  return {[mass](double r) { return r * r / (std::sqrt(mass * mass + r * r) + mass); },
          "sqrt(m^2+r^2)-m, m=" + std::to_string(mass), Growth::sqrt_quadratic};
}

CentralPotential affine(CentralPotential base, double scale, double shift) {
  if (!(scale > 0.0)) throw std::invalid_argument("affine: scale must be positive");
  std::string label = std::to_string(scale) + "*(" + base.label + ")+" + std::to_string(shift);
  const Growth growth = base.growth;
  return {[b = std::move(base.evaluator), scale, shift](double r) { return scale * b(r) + shift; }, std::move(label),
          growth};
}

double finite_difference_ground_energy(const CentralPotential& potential, double box_radius, int points) {
  if (points < 16) throw std::invalid_argument("finite_difference_ground_energy: need at least 16 points");
  const auto n = static_cast<std::size_t>(points);
  const double h = box_radius / static_cast<double>(n + 1);
  const double inv_h2 = 1.0 / (h * h);

  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = potential(static_cast<double>(i + 1) * h);
    if (!std::isfinite(v[i])) throw std::domain_error("potential '" + potential.label + "' is not finite on the grid");
  }

  SymmetricTridiagonal t;
  t.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.diagonal[i] = 2.0 * inv_h2 + v[i];
  t.off_diagonal.assign(n - 1, -inv_h2);

  const Interval bracket = bisect_eigenvalue(t, 0, 1e-9);
  const std::vector<double> u = inverse_iteration(t, bracket.lo, 3);

  // Rayleigh quotient written as a sum of squares of differences; no
  // cancellation against the 2/h^2 diagonal.
  double kinetic = u.front() * u.front() + u.back() * u.back();
  double potential_part = 0.0;
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) {
      const double du = u[i + 1] - u[i];
      kinetic += du * du;
    }
    potential_part += v[i] * u[i] * u[i];
    norm += u[i] * u[i];
  }
  return (kinetic * inv_h2 + potential_part) / norm;
}

EigenResult solve_ground_state(const CentralPotential& potential, const GridConfig& grid) {
  validate(grid);
  check_confining(potential, grid.box_radius);

  const int levels = grid.refinement_levels;
  EigenResult result;
  result.grid_used = grid;
  result.level_energies.reserve(levels);

  // Romberg tableau in powers of h^2; intervals double at each level.
  std::vector<std::vector<double>> table(levels);
  for (int k = 0; k < levels; ++k) {
    const long intervals = static_cast<long>(grid.points + 1) << k;
    const double e = finite_difference_ground_energy(potential, grid.box_radius, static_cast<int>(intervals - 1));
    result.level_energies.push_back(e);
    table[k].push_back(e);
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 4.0;
      table[k].push_back(table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0));
    }
  }

  const auto& last = table.back();
  result.energy = last.back();
  if (levels >= 2) {
    result.error_estimate = std::abs(last[levels - 1] - last[levels - 2]);
  } else {
    result.error_estimate = std::numeric_limits<double>::infinity();
  }
  result.converged = result.error_estimate <= grid.target_tol * std::max(1.0, std::abs(result.energy));
  return result;
}

double box_radius_for(const CentralPotential& potential, double energy, double margin) {
  const double target = energy + margin;
  double r = 1.0;
  switch (potential.growth) {
    case Growth::linear:
      r = std::max(1.0, target);
      break;
    case Growth::quadratic:
    case Growth::sqrt_quadratic:
      r = std::sqrt(std::max(1.0, target));
      break;
  }

  double lo = r;
  double hi = r;
  if (potential(r) >= target) {
    while (potential(lo) >= target) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-8) return hi;
    }
  } else {
    while (potential(hi) < target) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e12) throw NonConfiningPotential("potential '" + potential.label + "' never reaches E + margin");
    }
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    (potential(mid) >= target ? hi : lo) = mid;
  }
  return hi;
}

EigenResult auto_solve(const CentralPotential& potential, double target_tol) {
  if (!(target_tol >= 1e-12)) throw std::invalid_argument("auto_solve: target_tol must be >= 1e-12");

  double estimate = potential(1.0);
  double radius = box_radius_for(potential, estimate);
  for (int it = 0; it < 10; ++it) {
    estimate = finite_difference_ground_energy(potential, radius, kRoughPoints);
    const double next = box_radius_for(potential, estimate);
    const bool settled = std::abs(next - radius) <= 0.01 * radius;
    radius = std::max(radius, next);
    if (settled) break;
  }

  EigenResult best;
  for (int points = kDefaultBasePoints; points <= kMaxBasePoints; points *= 2) {
    best = solve_ground_state(potential, GridConfig{radius, points, 3, target_tol});
    if (best.converged) break;
  }
  if (!best.converged) return best;

  // Grid refinement cannot see the Dirichlet wall. Compare the coarsest
  // level against the same spacing on a box with twice the decay margin; the
  // discretization error cancels in the difference.
  for (double margin = 2.0 * kBoxMargin; margin <= kMaxBoxMargin; margin *= 2.0) {
    const GridConfig grid = best.grid_used;
    const double spacing = grid.box_radius / (grid.points + 1);
    const double wider = std::max(box_radius_for(potential, best.energy, margin), grid.box_radius);
    const int points = static_cast<int>(std::ceil(wider / spacing)) - 1;
    const double wide_energy = finite_difference_ground_energy(potential, (points + 1) * spacing, points);
    const double box_error = std::abs(wide_energy - best.level_energies.front());
    const double allowed = target_tol * std::max(1.0, std::abs(best.energy));
    if (box_error <= 0.5 * allowed) {
      best.error_estimate += box_error;
      best.converged = best.error_estimate <= allowed;
      return best;
    }
    best = solve_ground_state(potential, GridConfig{(points + 1) * spacing, points, 3, target_tol});
    if (!best.converged) return best;
  }
  best.converged = false;
  return best;
}

}  // namespace salpeter
