#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "siqm/error.hpp"
#include "siqm/spectra.hpp"

using namespace siqm;

TEST_CASE("ladder spectra") {
  const auto ss = energy_levels(PotentialFamily::selfsimilar(0.5, 1.0, 1.0), 6);
  for (int n = 0; n <= 6; ++n) CHECK(ss[n] == doctest::Approx(oracle::scaling_level(0.5, 1.0, n)).epsilon(1e-15));
  CHECK(ss[3] == 1.75);

  const auto ho = energy_levels(PotentialFamily::harmonic(1.0), 5);
  for (int n = 0; n <= 5; ++n) CHECK(ho[n] == 2.0 * n);

  const auto mo = energy_levels(PotentialFamily::morse(2.5), 2);
  for (int n = 0; n <= 2; ++n) CHECK(mo[n] == doctest::Approx(oracle::morse_level(2.5, n)));
  try {
    energy_levels(PotentialFamily::morse(2.5), 3);
    FAIL("expected level-not-bound");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LevelNotBound);
  }
}

TEST_CASE("normalization factors") {
  const auto t = scaling_spectrum(0.5, 1.0, 4);
  CHECK(normalization_factor(t, 0) == 1.0);
  CHECK(normalization_factor(t, 1) == 1.0);
  // E2 (E2 - E1) = 1.5 * 0.5
  CHECK(normalization_factor(t, 2) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  const auto ho = scaling_spectrum(1.0, 2.0, 4);
  // E_n (E_n - E_{n-1}) ... (E_n - E_1) = 2^n n!
  CHECK(normalization_factor(ho, 3) == doctest::Approx(std::sqrt(8.0 * 6.0)).epsilon(1e-14));
}

TEST_CASE("ladder-built eigenstates") {
  SUBCASE("n = 0 is the ground state") {
    const Grid g = build_grid(-15.0, 15.0, 3001);
    const auto ss = PotentialFamily::selfsimilar(0.5, 1.0, 1.0);
    const auto a = build_eigenstate(ss, 0, g);
    const auto b = ground_state(ss, 1.0, g);
    for (std::size_t i = 0; i < g.n_points(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-14);
  }
  SUBCASE("harmonic against Hermite functions") {
    const Grid g = build_grid(-10.0, 10.0, 2001);
    for (int n : {1, 2, 3}) {
      const auto psi = build_eigenstate(PotentialFamily::harmonic(1.0), n, g);
      const auto ref = sample(g, [n](double x) { return oracle::hermite_function(n, x); });
      CHECK(std::abs(inner_product(ref, psi)) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  SUBCASE("raw norm matches the spectrum") {
    const Grid g = build_grid(-30.0, 30.0, 3001);
    const auto b = build_eigenstate_detailed(PotentialFamily::selfsimilar(0.5, 1.0, 1.0), 2, g);
    CHECK(b.expected_norm == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(b.raw_norm == doctest::Approx(b.expected_norm).epsilon(1e-4));
  }
  SUBCASE("coarse grid is reported") {
    const Grid g = build_grid(-10.0, 10.0, 40);
    try {
      build_eigenstate(PotentialFamily::harmonic(1.0), 6, g);
      FAIL("expected under-resolved");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnderResolved);
    }
  }
}

TEST_CASE("finite-difference spectra") {
  SUBCASE("harmonic") {
    const Grid g = build_grid(-10.0, 10.0, 2001);
    const auto fd = fd_diagonalize(PotentialFamily::harmonic(1.0), g, 5);
    for (int n = 0; n < 5; ++n) CHECK(fd.energies[static_cast<std::size_t>(n)] == doctest::Approx(2.0 * n).epsilon(1e-6));
    CHECK(std::abs(fd.ground_offset) < 1e-6);
  }
  SUBCASE("morse") {
    const Grid g = build_grid(-6.0, 40.0, 4601);
    const auto fd = fd_diagonalize(PotentialFamily::morse(2.5), g, 3);
    for (int n = 0; n < 3; ++n)
      CHECK(std::abs(fd.energies[static_cast<std::size_t>(n)] - oracle::morse_level(2.5, n)) < 1e-3);
  }
  SUBCASE("selfsimilar on a wide grid") {
    const Grid g = build_grid(-80.0, 80.0, 8001);
    const auto ss = PotentialFamily::selfsimilar(0.5, 1.0, 1.0, {120, {200.0, 0.01, 0.8}});
    const auto fd = fd_diagonalize(ss, g, 7);
    for (int n = 0; n <= 6; ++n) {
      const auto k = static_cast<std::size_t>(n);
      CHECK(std::abs(fd.energies[k] - oracle::scaling_level(0.5, 1.0, n)) < 1e-6);
      CHECK(eigen_residual(ss, fd.states[k], fd.energies[k] + fd.ground_offset) < 1e-4);
      CHECK(fd.edge_weights[k] < 1e-8);
      for (std::size_t j = 0; j < k; ++j) CHECK(std::abs(inner_product(fd.states[j], fd.states[k])) < 1e-6);
      CHECK(fd.states[k].norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}
