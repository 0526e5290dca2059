#pragma once

#include <functional>

namespace salpeter {

struct MinimizeResult {
  double argmin = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
/// Stops once the bracket is narrower than rel_tol * |x|. The returned value
/// is the smallest function value seen, not a re-evaluation at the midpoint.
MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                       double rel_tol = 1e-12, int max_evaluations = 2000);

/// Minimizes a unimodal f over t > 0. Starting from a scale guess, the
/// minimum is bracketed on a log grid (factor 2 steps) within
/// [guess * 1e-8, guess * 1e8], then refined by golden section.
MinimizeResult minimize_on_half_line(const std::function<double(double)>& f, double scale_guess,
                                     double rel_tol = 1e-12);

/// min over t > 0 of  beta * sqrt(m^2 + a / t) + b * t.
///
/// Every energy formula in this library reduces to this shape with t = r^2:
/// the one-body relation (a = P^2), the scaled one-body problem
/// (a = lambda P^2, b = gamma) and the N-body bound (beta = N,
/// a = 2(N-1)P^2/N, b = N(N-1)gamma/2). The objective is strictly convex in t.
MinimizeResult minimize_two_term(double beta, double mass, double a, double b, double rel_tol = 1e-12);

}  // namespace salpeter
