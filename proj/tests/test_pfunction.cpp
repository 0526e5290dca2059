#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "salpeter/oracle.hpp"
#include "salpeter/pfunction.hpp"

using namespace salpeter;

namespace {

const double kMasses[] = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0, 1000.0};

// at m = 0, e = min_r P/r + r^2 = 3 (P/2)^(2/3)
double p_massless(double e0) { return 2.0 * std::pow(e0 / 3.0, 1.5); }

}  // namespace

TEST_CASE("e(0) is the linear-potential ground state") {
  CHECK(std::abs(e_of_m(0.0) - 2.33810741045976703848919725245) < 1e-9);
}

TEST_CASE("P(0) follows from e(0) and matches the published lower value") {
  const double p0 = p_of_m(0.0);
  CHECK(std::abs(p0 - p_massless(2.33810741045976703848919725245)) < 1e-9);
  CHECK(std::abs(p0 - 1.37608354334377489008) < 1e-9);
  // published value truncated to three decimals
  CHECK(p0 > kPublishedLowerP);
  CHECK(p0 < kPublishedLowerP + 1e-3);
}

TEST_CASE("P(m) lies in (1.376, 1.5) and is nondecreasing") {
  double previous = 0.0;
  for (double m : kMasses) {
    const double p = p_of_m(m);
    CHECK(p > 1.3760);
    CHECK(p < kGaussianP);
    CHECK(p >= previous);
    previous = p;
  }
  CHECK(p_of_m(1000.0) > 1.49);
}

TEST_CASE("defining relation closes on the mass grid") {
  for (double m : kMasses) {
    const double e = e_of_m(m);
    CHECK(std::abs(e_via_min(m, p_of_m(m)) - e) <= 1e-6 * std::max(1.0, e));
  }
}

TEST_CASE("P inversion is exact for synthetic energies") {
  // e_via_min(m, P) then p_from_energy must return P
  for (double m : {0.0, 0.3, 4.0, 250.0})
    for (double p : {1.2, 1.376, 1.45, 1.5}) CHECK(std::abs(p_from_energy(m, e_via_min(m, p)) - p) < 1e-9);
}

TEST_CASE("stable excess form agrees with the direct form at moderate mass") {
  for (double m : {0.5, 2.0, 8.0}) {
    const double e = e_of_m(m);
    CHECK(std::abs(p_from_excess(m, e - m) - p_from_energy(m, e)) < 1e-10);
  }
}

TEST_CASE("oscillator-basis oracle agrees with e(m)") {
  for (double m : {0.0, 0.5, 1.0, 5.0, 50.0}) {
    const auto basis = oracle::salpeter_basis_energy(m);
    CHECK(std::abs(basis.energy - e_of_m(m)) / std::max(1.0, e_of_m(m)) < 1e-5);
  }
}

TEST_CASE("e(m) approaches the nonrelativistic asymptote from below") {
  for (double m : {10.0, 100.0, 1000.0}) {
    const double gap = e_nr(m) - e_of_m(m);
    CHECK(gap > 0.0);
    // leading relativistic correction is O(m^-2)
    CHECK(gap < 2.0 / (m * m));
  }
  CHECK_THROWS_AS(e_nr(0.0), std::invalid_argument);
}

TEST_CASE("e(m) - m decreases with m") {
  double previous = INFINITY;
  for (double m : kMasses) {
    const double excess = default_energy_table().excess(m);
    CHECK(excess < previous);
    previous = excess;
  }
}

TEST_CASE("memo table stores one entry per key and survives concurrent use") {
  OneBodyEnergyTable table;
  std::vector<double> results(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { results[i] = table.energy(0.25 * (i % 2)); });
  for (auto& t : threads) t.join();
  CHECK(table.size() == 2);
  for (int i = 2; i < 8; ++i) CHECK(results[i] == results[i % 2]);
  table.clear();
  CHECK(table.size() == 0);
}

TEST_CASE("kinetic parametrization") {
  const double m = 1.0;
  const double r = 0.8;
  const auto k = kinetic_parametrization(m, r);
  CHECK(k.h_eff == doctest::Approx(r * r));
  CHECK(k.s == doctest::Approx(std::sqrt(m * m + std::pow(p_of_m(m) / r, 2))));
  CHECK_THROWS_AS(kinetic_parametrization(m, 0.0), std::invalid_argument);
}

TEST_CASE("negative masses are rejected") {
  CHECK_THROWS_AS(e_of_m(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(p_of_m(-0.5), std::invalid_argument);
}
