#include <doctest.h>

#include <cmath>
#include <random>

#include "salpeter/bounds.hpp"
#include "salpeter/oracle.hpp"

using namespace salpeter;

namespace {

constexpr double kE0 = 2.33810741045976703848919725245;

}  // namespace

TEST_CASE("massless lower bounds are multiples of e(0)") {
  CHECK(lower_bound({2, 0.0, 1.0}) == doctest::Approx(3.71151416297847696).epsilon(1e-9));
  CHECK(lower_bound({2, 0.0, 2.0}) == doctest::Approx(4.67621482091953408).epsilon(1e-9));
  CHECK(lower_bound({3, 0.0, 1.0}) == doctest::Approx(7.72026056943955827).epsilon(1e-9));
  CHECK(lower_bound({4, 0.0, 1.0}) == doctest::Approx(12.2551497493969655).epsilon(1e-9));
  CHECK(lower_bound({5, 0.0, 1.0}) == doctest::Approx(17.2273226946765782).epsilon(1e-9));
  CHECK(lower_bound({5, 0.0, 1.0}) / kE0 == doctest::Approx(std::cbrt(400.0)).epsilon(1e-9));
}

TEST_CASE("massless upper bound has a closed form") {
  // N = 2, m = 0: min_r 2 P / r + r^2 = 3 P^(2/3)
  CHECK(upper_bound({2, 0.0, 1.0}) == doctest::Approx(3.93111209131334491).epsilon(1e-12));
  CHECK(bound_formula({2, 0.0, 1.0}, 0.5) == doctest::Approx(1.88988157484230975).epsilon(1e-12));
}

TEST_CASE("running mass argument") {
  CHECK(mu_of({2, 1.0, 1.0}) == doctest::Approx(std::cbrt(2.0)).epsilon(1e-15));
  CHECK(mu_of({8, 2.0, 0.5}) == doctest::Approx(1.37722415095727428).epsilon(1e-15));
  CHECK(mu_of({4, 0.0, 3.0}) == 0.0);
}

TEST_CASE("nonrelativistic energies") {
  CHECK(nonrel_energy({2, 1.0, 1.0}) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(nonrel_energy({3, 2.0, 1.0}) == doctest::Approx(6.0 + 3.0 * std::sqrt(3.0)).epsilon(1e-15));
  CHECK(nonrel_energy({8, 1.0, 1.0}) == doctest::Approx(50.0).epsilon(1e-15));
  CHECK_THROWS_AS(nonrel_energy({3, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("two-body lower bound is the exact energy") {
  for (double m : {0.0, 1.0, 10.0})
    for (double g : {0.5, 1.0, 2.0})
      CHECK(std::abs(lower_bound({2, m, g}) / two_body_exact(m, g) - 1.0) < 1e-10);
}

TEST_CASE("lower bound equals the reduced one-body scaling law and its minimum form") {
  for (int n = 2; n <= 8; ++n)
    for (double m : {0.0, 0.4, 3.0, 30.0}) {
      const SystemSpec sys{n, m, 1.3};
      const double lower = lower_bound(sys);
      const ScaledOneBodySpec reduced = reduced_one_body(sys);
      CHECK(std::abs(scaled_one_body_energy(reduced) / lower - 1.0) < 1e-12);
      CHECK(std::abs(scaled_one_body_min(reduced, p_of_m(mu_of(sys))) / lower - 1.0) < 1e-6);
      CHECK(std::abs(bound_formula(sys, p_of_m(mu_of(sys))) / lower - 1.0) < 1e-6);
    }
}

TEST_CASE("upper bound equals the minimized Gaussian trial energy") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> particles(2, 8);
  std::uniform_real_distribution<double> log_mass(-2.0, 3.0);
  std::uniform_real_distribution<double> coupling(0.2, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    const SystemSpec sys{particles(rng), std::pow(10.0, log_mass(rng)), coupling(rng)};
    CHECK(std::abs(oracle::gaussian_upper_minimum(sys).energy / upper_bound(sys) - 1.0) < 1e-10);
  }
}

TEST_CASE("sandwich property") {
  int violations = 0;
  for (int n = 2; n <= 8; ++n)
    for (double m : {0.0, 0.1, 1.0, 10.0, 100.0, 1000.0})
      for (double g : {0.5, 1.0, 2.0}) {
        const EnergyBounds b = bounds_pair({n, m, g});
        if (b.lower > b.upper) ++violations;
        CHECK(b.p_lower < b.p_upper);
      }
  CHECK(violations == 0);
}

TEST_CASE("bounds approach the nonrelativistic energy and each other") {
  for (int n = 2; n <= 8; ++n) {
    double previous_gap = INFINITY;
    for (double m : {10.0, 100.0, 1000.0}) {
      const SystemSpec sys{n, m, 1.0};
      const EnergyBounds b = bounds_pair(sys);
      const double gap = (b.upper - b.lower) / (b.lower - n * m);
      CHECK(gap < previous_gap);
      previous_gap = gap;
      const double nr = nonrel_energy(sys);
      const double excess = nr - n * m;
      CHECK(b.lower < nr);
      CHECK(std::abs(b.upper - nr) / excess < 3.0 / m);
      CHECK(std::abs(b.lower - nr) / excess < 0.1);
    }
  }
}

TEST_CASE("invalid systems are rejected") {
  CHECK_THROWS_AS(lower_bound({1, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(upper_bound({3, -1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(bounds_pair({3, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(bound_formula({3, 1.0, 1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scaled_one_body_energy({1.0, 0.0, 1.0, 1.0}), std::invalid_argument);
}
