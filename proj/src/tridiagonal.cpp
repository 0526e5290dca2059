#include "salpeter/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace salpeter {

namespace {

void check_shape(const SymmetricTridiagonal& t) {
  if (t.diagonal.empty()) throw std::invalid_argument("tridiagonal matrix is empty");
  if (t.off_diagonal.size() + 1 != t.diagonal.size())
    throw std::invalid_argument("tridiagonal matrix: off-diagonal must have n - 1 entries");
}

// Smallest pivot magnitude allowed in the Sturm recurrence (LAPACK's pivmin).
double pivot_floor(const SymmetricTridiagonal& t) {
  double emax = 1.0;
  for (double e : t.off_diagonal) emax = std::max(emax, e * e);
  return std::numeric_limits<double>::min() * emax;
}

}  // namespace

std::size_t sturm_count(const SymmetricTridiagonal& t, double x) {
  check_shape(t);
  const double pivmin = pivot_floor(t);
  std::size_t negatives = 0;
  double q = t.diagonal[0] - x;
  if (std::abs(q) < pivmin) q = -pivmin;
  if (q < 0.0) ++negatives;
  for (std::size_t i = 1; i < t.diagonal.size(); ++i) {
    const double e = t.off_diagonal[i - 1];
    q = t.diagonal[i] - x - e * e / q;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

Interval gershgorin_interval(const SymmetricTridiagonal& t) {
  check_shape(t);
  const std::size_t n = t.size();
  Interval g{std::numeric_limits<double>::max(), std::numeric_limits<double>::lowest()};
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.off_diagonal[i - 1]);
    if (i + 1 < n) radius += std::abs(t.off_diagonal[i]);
    g.lo = std::min(g.lo, t.diagonal[i] - radius);
    g.hi = std::max(g.hi, t.diagonal[i] + radius);
  }
  return g;
}

Interval bisect_eigenvalue(const SymmetricTridiagonal& t, std::size_t k, double rel_width) {
  check_shape(t);
  if (k >= t.size()) throw std::out_of_range("bisect_eigenvalue: eigenvalue index out of range");
  Interval g = gershgorin_interval(t);
  const double spread = std::max(g.hi - g.lo, 1.0);
  double lo = g.lo - 1e-12 * spread;
  double hi = g.hi + 1e-12 * spread;
  const double abs_floor = 4.0 * std::numeric_limits<double>::epsilon() * spread;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= std::max(rel_width * std::max(std::abs(lo), std::abs(hi)), abs_floor)) break;
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

std::vector<double> solve_shifted(const SymmetricTridiagonal& t, double shift, std::span<const double> rhs) {
  check_shape(t);
  const std::size_t n = t.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_shifted: right-hand side has wrong length");
  const double pivmin = pivot_floor(t);

  std::vector<double> pivot(n);
  std::vector<double> x(rhs.begin(), rhs.end());
  pivot[0] = t.diagonal[0] - shift;
  if (std::abs(pivot[0]) < pivmin) pivot[0] = pivmin;
  for (std::size_t i = 1; i < n; ++i) {
    const double l = t.off_diagonal[i - 1] / pivot[i - 1];
    pivot[i] = t.diagonal[i] - shift - l * t.off_diagonal[i - 1];
    if (std::abs(pivot[i]) < pivmin) pivot[i] = pivmin;
    x[i] -= l * x[i - 1];
  }
  x[n - 1] /= pivot[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) x[i] = (x[i] - t.off_diagonal[i] * x[i + 1]) / pivot[i];
  return x;
}

std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double shift, int iterations) {
  const std::size_t n = t.size();
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < iterations; ++it) {
    v = solve_shifted(t, shift, v);
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (!(norm > 0.0) || !std::isfinite(norm)) throw std::runtime_error("inverse_iteration: breakdown");
    for (double& c : v) c /= norm;
  }
  return v;
}

}  // namespace salpeter
