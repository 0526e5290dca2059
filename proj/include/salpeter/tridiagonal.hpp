#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace salpeter {

/// Real symmetric tridiagonal matrix: diagonal of length n, off-diagonal of
/// length n - 1.
struct SymmetricTridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;

  std::size_t size() const { return diagonal.size(); }
};

/// Number of eigenvalues strictly below x (Sturm sequence sign count, i.e.
/// the number of negative pivots of the LDL^T factorization of T - x I).
std::size_t sturm_count(const SymmetricTridiagonal& t, double x);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Gershgorin enclosure of the whole spectrum.
Interval gershgorin_interval(const SymmetricTridiagonal& t);

/// Bisection on the Sturm count for the k-th smallest eigenvalue (k = 0 is the
/// lowest). On return lo has count <= k and hi has count >= k + 1, so the
/// eigenvalue lies in [lo, hi].
Interval bisect_eigenvalue(const SymmetricTridiagonal& t, std::size_t k, double rel_width = 1e-10);

/// Solves (T - shift I) x = rhs with the Thomas algorithm. Intended for shifts
/// below the lowest eigenvalue, where every pivot is positive.
std::vector<double> solve_shifted(const SymmetricTridiagonal& t, double shift, std::span<const double> rhs);

/// Inverse iteration from a constant start vector; returns a unit vector.
std::vector<double> inverse_iteration(const SymmetricTridiagonal& t, double shift, int iterations = 3);

}  // namespace salpeter
