#include "salpeter/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace salpeter {

namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

}  // namespace

MinimizeResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                       double rel_tol, int max_evaluations) {
  if (!(lo < hi)) throw std::invalid_argument("golden_section_minimize: empty bracket");
  if (!(rel_tol > 0.0)) throw std::invalid_argument("golden_section_minimize: rel_tol must be positive");

  MinimizeResult best{lo, f(lo), 1};
  auto eval = [&](double x) {
    const double v = f(x);
    ++best.evaluations;
    if (v < best.value) {
      best.value = v;
      best.argmin = x;
    }
    return v;
  };
  eval(hi);

  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);

  while (best.evaluations < max_evaluations) {
    const double scale = std::max(std::abs(c), std::abs(d));
    if (b - a <= rel_tol * scale) break;
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
  }
  return best;
}

MinimizeResult minimize_on_half_line(const std::function<double(double)>& f, double scale_guess, double rel_tol) {
  if (!(scale_guess > 0.0) || !std::isfinite(scale_guess))
    throw std::invalid_argument("minimize_on_half_line: scale guess must be positive and finite");

  const double t_min = scale_guess * 1e-8;
  const double t_max = scale_guess * 1e8;

  // Walk downhill in factor-2 steps until the minimum sits between two
  // neighbours of the current point.
  double t = scale_guess;
  double ft = f(t);
  int evaluations = 1;
  double left = t / 2.0;
  double f_left = f(left);
  double right = t * 2.0;
  double f_right = f(right);
  evaluations += 2;
  while (f_left < ft && left > t_min) {
    right = t;
    f_right = ft;
    t = left;
    ft = f_left;
    left = t / 2.0;
    f_left = f(left);
    ++evaluations;
  }
  while (f_right < ft && right < t_max) {
    left = t;
    f_left = ft;
    t = right;
    ft = f_right;
    right = t * 2.0;
    f_right = f(right);
    ++evaluations;
  }

  MinimizeResult r = golden_section_minimize(f, left, right, rel_tol);
  r.evaluations += evaluations;
  if (ft < r.value) {
    r.value = ft;
    r.argmin = t;
  }
  return r;
}

MinimizeResult minimize_two_term(double beta, double mass, double a, double b, double rel_tol) {
  if (!(beta > 0.0) || !(a > 0.0) || !(b > 0.0) || !(mass >= 0.0))
    throw std::invalid_argument("minimize_two_term: parameters must be positive (mass non-negative)");

  const double m2 = mass * mass;
  auto objective = [=](double t) { return beta * std::sqrt(m2 + a / t) + b * t; };

  // Stationary points of the two asymptotic regimes: beta*sqrt(a/t) + b t
  // (m = 0) and beta*a/(2 m t) + b t (m large). The smaller is within a small
  // factor of the true minimizer.
  const double t_massless = std::cbrt(beta * beta * a / (4.0 * b * b));
  double guess = t_massless;
  if (mass > 0.0) guess = std::min(guess, std::sqrt(beta * a / (2.0 * mass * b)));
  return minimize_on_half_line(objective, guess, rel_tol);
}

}  // namespace salpeter
