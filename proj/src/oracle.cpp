#include "salpeter/oracle.hpp"

#include <fftw3.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <Eigen/Dense>

#include "salpeter/minimize.hpp"
#include "salpeter/radial_eigensolver.hpp"

namespace salpeter::oracle {

namespace {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kPanelNodes = 20;

struct QuadratureRule {
  std::vector<double> nodes;  // in y = b p
  std::vector<double> weights;
};

// Composite Gauss-Legendre on y in [0, sqrt(4 size + 3) + 8]. Panels hold
// about one and a half wavelengths of the most oscillatory product of basis
// functions. With grading > 0 the first panel is split geometrically down to
// that scale.
QuadratureRule momentum_rule(int size, int min_points, double grading) {
  const double y_turn = std::sqrt(4.0 * size + 3.0);
  const double y_max = y_turn + 8.0;
  const int wave_panels = static_cast<int>(std::ceil(y_turn * y_max / (2.0 * std::numbers::pi))) + 4;
  const int panels = std::max(wave_panels, (min_points + kPanelNodes - 1) / kPanelNodes);
  const double dy = y_max / panels;

  std::vector<double> edges{0.0};
  if (grading > 0.0 && grading < dy) {
    std::vector<double> inner;
    for (double e = dy / 2.0; e > grading / 4.0 && inner.size() < 48; e /= 2.0) inner.push_back(e);
    edges.insert(edges.end(), inner.rbegin(), inner.rend());
  }
  for (int i = 1; i <= panels; ++i) edges.push_back(dy * i);

  using Gauss = boost::math::quadrature::gauss<double, kPanelNodes>;
  const auto& abscissa = Gauss::abscissa();
  const auto& weight = Gauss::weights();

  QuadratureRule rule;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    for (std::size_t i = 0; i < abscissa.size(); ++i) {
      for (double sign : {-1.0, 1.0}) {
        rule.nodes.push_back(mid + sign * half * abscissa[i]);
        rule.weights.push_back(half * weight[i]);
      }
    }
  }
  return rule;
}

// Rows: quadrature nodes. Column n: sqrt(2 w) y g_n(y^2), where
// g_n(x) = l_n(x) e^{-x/2} and l_n are the Laguerre polynomials L_n^{1/2}
// orthonormal under x^{1/2} e^{-x}. With this weighting Phi^T Phi is the
// basis overlap and Phi^T diag(f) Phi the matrix of f(p).
Matrix basis_on_rule(int size, const QuadratureRule& rule) {
  const auto k = static_cast<Eigen::Index>(rule.nodes.size());
  Matrix phi(k, size);
  const double l0 = 1.0 / std::sqrt(std::tgamma(1.5));
  constexpr double kBig = 1e150;
  for (Eigen::Index row = 0; row < k; ++row) {
    const double y = rule.nodes[row];
    const double x = y * y;
    const double front = std::sqrt(2.0 * rule.weights[row]) * y;
    double prev = 0.0;
    double cur = l0;
    double log_scale = -0.5 * x;
    for (int n = 0; n < size; ++n) {
      phi(row, n) = front * cur * std::exp(log_scale);
      const double next =
          ((2.0 * n + 1.5 - x) * cur - std::sqrt(n * (n + 0.5)) * prev) / std::sqrt((n + 1.0) * (n + 1.5));
      prev = cur;
      cur = next;
      if (std::abs(cur) > kBig) {
        prev /= kBig;
        cur /= kBig;
        log_scale += std::log(kBig);
      }
    }
  }
  return phi;
}

void check_overlap(const Matrix& phi) {
  const Matrix overlap = phi.transpose() * phi;
  const double deviation = (overlap - Matrix::Identity(overlap.rows(), overlap.cols())).cwiseAbs().maxCoeff();
  if (!(deviation < 1e-10)) {
    std::ostringstream msg;
    msg << "momentum quadrature does not resolve the basis: overlap deviates from identity by " << deviation;
    throw QuadratureError(msg.str());
  }
}

Matrix operator_matrix(const Matrix& phi, const QuadratureRule& rule, double scale,
                       const std::function<double(double)>& f) {
  Eigen::VectorXd values(phi.rows());
  for (Eigen::Index i = 0; i < phi.rows(); ++i) values[i] = f(rule.nodes[i] / scale);
  return phi.transpose() * values.asDiagonal() * phi;
}

std::mutex fftw_planner_mutex;

using Complex = std::complex<double>;

void fft(std::vector<Complex>& data, int rows, int cols, int direction) {
  fftw_plan plan;
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  {
    std::lock_guard lock(fftw_planner_mutex);
    plan = rows == 1 ? fftw_plan_dft_1d(cols, buffer, buffer, direction, FFTW_ESTIMATE)
                     : fftw_plan_dft_2d(rows, cols, buffer, buffer, direction, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(fftw_planner_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace

double default_basis_scale(double mass) {
  const double t = minimize_two_term(1.0, mass, kGaussianP * kGaussianP, 1.0).argmin;
  return std::sqrt(2.0 * t / 3.0);
}

std::vector<double> momentum_operator_matrix(int size, double scale, int quadrature_points,
                                             const std::function<double(double)>& f) {
  if (size < 1 || !(scale > 0.0)) throw std::invalid_argument("momentum_operator_matrix: bad basis");
  const QuadratureRule rule = momentum_rule(size, quadrature_points, 0.0);
  const Matrix phi = basis_on_rule(size, rule);
  check_overlap(phi);
  const Matrix m = operator_matrix(phi, rule, scale, f);
  return {m.data(), m.data() + m.size()};
}

double salpeter_basis_energy_fixed(double mass, const BasisConfig& basis) {
  if (!(mass >= 0.0)) throw std::invalid_argument("salpeter_basis_energy: mass must be non-negative");
  if (basis.size < 4) throw std::invalid_argument("BasisConfig: size must be >= 4");
  if (basis.quadrature_points < 64) throw std::invalid_argument("BasisConfig: need >= 64 quadrature points");
  const double b = basis.scale > 0.0 ? basis.scale : default_basis_scale(mass);
  const int n = basis.size;

  const QuadratureRule rule = momentum_rule(n, basis.quadrature_points, mass * b);
  const Matrix phi = basis_on_rule(n, rule);
  check_overlap(phi);
  // Kinetic energy minus the rest mass, written without cancellation.
  const Matrix kinetic =
      operator_matrix(phi, rule, b, [mass](double p) { return p * p / (std::sqrt(mass * mass + p * p) + mass); });

  // Momentum-space basis functions carry a factor (-1)^n relative to the
  // position-space ones in which r^2 is tridiagonal.
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = ((i + j) % 2 == 0 ? 1.0 : -1.0) * kinetic(i, j);
  const double b2 = b * b;
  for (int i = 0; i < n; ++i) {
    h(i, i) += b2 * (2.0 * i + 1.5);
    if (i + 1 < n) {
      const double off = -b2 * std::sqrt((i + 1.0) * (i + 1.5));
      h(i, i + 1) += off;
      h(i + 1, i) += off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("salpeter_basis_energy: eigensolver failed");
  return mass + solver.eigenvalues()[0];
}

BasisEigenResult salpeter_basis_energy(double mass, const BasisConfig& basis) {
  BasisEigenResult result;
  result.basis_used = basis;
  if (result.basis_used.scale <= 0.0) result.basis_used.scale = default_basis_scale(mass);
  for (int size = basis.size; size <= std::max(basis.size, basis.max_size); size *= 2) {
    result.basis_used.size = size;
    const double e = salpeter_basis_energy_fixed(mass, result.basis_used);
    result.sizes.push_back(size);
    result.energies.push_back(e);
    result.energy = e;
    if (result.energies.size() >= 2) {
      result.error_estimate = std::abs(e - result.energies[result.energies.size() - 2]);
      if (result.error_estimate <= basis.target_tol * std::max(1.0, std::abs(e))) {
        result.converged = true;
        break;
      }
    } else {
      result.error_estimate = std::numeric_limits<double>::infinity();
    }
  }
  return result;
}

double lemma1_residual(int grid_points, const std::vector<GaussianComponent>& profile) {
  const int n = grid_points;
  if (n < 64 || (n & (n - 1)) != 0) throw std::invalid_argument("lemma1_residual: grid must be a power of two >= 64");
  if (profile.empty()) throw std::invalid_argument("lemma1_residual: empty profile");

  double widest = 0.0;
  double offset = 0.0;
  for (const auto& g : profile) {
    if (!(g.width > 0.0)) throw std::invalid_argument("lemma1_residual: widths must be positive");
    widest = std::max(widest, g.width);
    offset = std::max(offset, std::abs(g.center));
  }
  const double half_width = 12.0 * widest + offset;
  const double length = 2.0 * half_width;
  const double dx = length / n;
  auto wavenumber = [&](int j) { return 2.0 * std::numbers::pi / length * (j < n / 2 ? j : j - n); };

  std::vector<Complex> psi(n);
  for (int j = 0; j < n; ++j) {
    const double x = -half_width + j * dx;
    double v = 0.0;
    for (const auto& g : profile) v += g.amplitude * std::exp(-0.5 * (x - g.center) * (x - g.center) / (g.width * g.width));
    psi[j] = v;
  }

  std::vector<Complex> spectrum = psi;
  fft(spectrum, 1, n, FFTW_FORWARD);
  double total = 0.0;
  double tail = 0.0;
  for (int j = 0; j < n; ++j) {
    const double power = std::norm(spectrum[j]);
    total += power;
    if (std::abs(j < n / 2 ? j : j - n) > 3 * n / 8) tail += power;
  }
  if (!(total > 0.0) || tail > 1e-12 * total)
    throw std::invalid_argument("lemma1_residual: trial function is under-resolved on this grid");

  // Right-hand side: the one-dimensional multiplier, broadcast over y.
  std::vector<Complex> rhs = spectrum;
  for (int j = 0; j < n; ++j) {
    const double p = wavenumber(j);
    rhs[j] *= std::sqrt(1.0 + p * p);
  }
  fft(rhs, 1, n, FFTW_BACKWARD);
  for (auto& v : rhs) v /= static_cast<double>(n);

  // Left-hand side: the two-dimensional multiplier on Psi(x, y) = psi(x).
  std::vector<Complex> lhs(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) lhs[static_cast<std::size_t>(j) * n + k] = psi[j];
  fft(lhs, n, n, FFTW_FORWARD);
  for (int j = 0; j < n; ++j) {
    const double p = wavenumber(j);
    for (int k = 0; k < n; ++k) {
      const double d = p - wavenumber(k);
      lhs[static_cast<std::size_t>(j) * n + k] *= std::sqrt(1.0 + d * d);
    }
  }
  fft(lhs, n, n, FFTW_BACKWARD);
  const double norm = static_cast<double>(n) * n;

  double diff = 0.0;
  double ref = 0.0;
  for (int j = 0; j < n; ++j) {
    ref += n * std::norm(rhs[j]);
    for (int k = 0; k < n; ++k) diff += std::norm(lhs[static_cast<std::size_t>(j) * n + k] / norm - rhs[j]);
  }
  return std::sqrt(diff / ref);
}

double lemma1_residual(int grid_points, double trial_width) {
  return lemma1_residual(grid_points, std::vector<GaussianComponent>{{1.0, 0.0, trial_width}});
}

double gaussian_upper_expectation(const SystemSpec& sys, GaussianTrial trial) {
  sys.validate();
  if (!(trial.alpha > 0.0)) throw std::invalid_argument("GaussianTrial: alpha must be positive");
  const double n = sys.particles;
  const double momentum_sq = 1.5 * trial.alpha;
  const double radius_sq = 1.5 / trial.alpha;
  return n * std::sqrt(sys.mass * sys.mass + 2.0 * (n - 1.0) / n * momentum_sq) +
         0.5 * n * (n - 1.0) * sys.coupling * radius_sq;
}

GaussianMinimum gaussian_upper_minimum(const SystemSpec& sys) {
  sys.validate();
  auto f = [&](double log_alpha) { return gaussian_upper_expectation(sys, {std::exp(log_alpha)}); };
  std::uintmax_t max_iter = 1000;
  const auto [x, fx] =
      boost::math::tools::brent_find_minima(f, -60.0, 60.0, std::numeric_limits<double>::digits / 2, max_iter);
  return {std::exp(x), fx};
}

double reduced_operator_energy(const SystemSpec& sys, double tol) {
  const ScaledOneBodySpec spec = reduced_one_body(sys);
  // beta sqrt(m^2 + lambda p^2) = beta sqrt(lambda) (sqrt(m'^2 + p^2) - m') + beta m
  // with m' = m / sqrt(lambda); r^2 -> -Laplacian in momentum space.
  const double root_lambda = std::sqrt(spec.lambda);
  const double strength = spec.beta * root_lambda / spec.coupling;
  const EigenResult r = auto_solve(affine(shifted_salpeter_potential(spec.mass / root_lambda), strength, 0.0), tol);
  if (!r.converged) throw ConvergenceError("reduced_operator_energy: radial solve did not converge", r);
  return spec.coupling * r.energy + spec.beta * spec.mass;
}

}  // namespace salpeter::oracle
