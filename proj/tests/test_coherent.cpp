#include <cmath>

#include "doctest.h"
#include "siqm/coherent.hpp"
#include "siqm/error.hpp"

using namespace siqm;

TEST_CASE("q-Pochhammer") {
  CHECK(q_pochhammer(0.5, 0.5, 0) == 1.0);
  CHECK(q_pochhammer(0.5, 0.5, 1) == 0.5);
  CHECK(q_pochhammer(0.5, 0.5, 2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(q_pochhammer(0.5, 0.5, 3) == doctest::Approx(0.375 * 0.875).epsilon(1e-15));
  CHECK(q_pochhammer(-1.0, 0.5, 2) == doctest::Approx(3.0));
  CHECK_THROWS_AS(q_pochhammer(0.5, 0.5, -1), Error);
}

TEST_CASE("recursive coefficients") {
  const auto t = scaling_spectrum(0.5, 1.0, 5);
  const auto s = coherent_recursive(t, {1.0, 0.0}, 4);
  CHECK(s.coefficients[0] == 1.0);
  CHECK(std::abs(s.coefficients[1] - 1.0) < 1e-15);
  CHECK(std::abs(s.coefficients[2] - 1.0 / std::sqrt(0.75)) < 1e-15);
  // E3 (E3 - E2)(E3 - E1) = 1.75 * 0.25 * 0.75
  CHECK(std::abs(s.coefficients[3] - 1.0 / std::sqrt(1.75 * 0.25 * 0.75)) < 1e-14);
}

TEST_CASE("closed form equals the recursion") {
  for (double q : {0.5, 0.9, 0.99}) {
    const auto closed = coherent_closed_scaling(q, 1.0, {0.3, 0.1}, 21);
    const auto rec = coherent_recursive(scaling_spectrum(q, 1.0, 20), {0.3, 0.1}, 21);
    for (int n = 0; n <= 20; ++n) {
      const auto k = static_cast<std::size_t>(n);
      CHECK(std::abs(closed.coefficients[k] - rec.coefficients[k]) <= 1e-12 * std::abs(rec.coefficients[k]));
    }
  }
  // small q: the recursion loses digits to E_n - E_j cancellation, the
  // closed form does not
  CHECK_NOTHROW(coherent_closed_scaling(0.2, 1.0, {0.3, 0.1}, 21));
}

TEST_CASE("q -> 1 approaches the Glauber state") {
  const double q = 1.0 - 1e-6;
  const auto s = coherent_closed_scaling(q, 1.0, {0.5, 0.0}, 8);
  double fact = 1.0;
  for (int n = 0; n < 8; ++n) {
    if (n > 0) fact *= n;
    CHECK(s.coefficients[static_cast<std::size_t>(n)].real() ==
          doctest::Approx(std::pow(0.5, n) / std::sqrt(fact)).epsilon(1e-5));
  }
}

TEST_CASE("coherent-state properties") {
  const int N = 20;
  const auto t = scaling_spectrum(0.5, 1.0, N);
  const auto ladder = build_ladder_matrices(t, N);
  SUBCASE("q = 1/2") {
    const auto r = coherent_property_residuals(coherent_recursive(t, {0.3, 0.0}, N), ladder);
    CHECK(r.eigen_residual <= 1e-10);
    CHECK(r.derivative_residual <= 1e-6);
    CHECK(r.termwise_defect <= 1e-14);
    // the c-number matrix does not have these states as eigenvectors
    CHECK(r.literal_eigen_residual > 1.0);
  }
  SUBCASE("normalized state gives the same residuals") {
    const auto s = normalize(coherent_recursive(t, {0.2, 0.1}, N));
    const auto r = coherent_property_residuals(s, ladder);
    CHECK(r.eigen_residual <= 1e-10);
    CHECK(r.derivative_residual <= 1e-6);
  }
  SUBCASE("z = 0 is the vacuum") {
    const auto r = coherent_property_residuals(coherent_recursive(t, {0.0, 0.0}, N), ladder);
    CHECK(r.eigen_residual == 0.0);
  }
  SUBCASE("q = 1 is an ordinary eigenvector") {
    const auto t1 = scaling_spectrum(1.0, 2.0, N);
    const auto r = coherent_property_residuals(coherent_recursive(t1, {0.4, 0.0}, N), build_ladder_matrices(t1, N));
    CHECK(r.literal_eigen_residual <= 1e-12);
    CHECK(r.eigen_residual <= 1e-12);
  }
}

TEST_CASE("shifted spectrum and ladder eigenvector") {
  const auto t = scaling_spectrum(0.5, 1.0, 4);
  const auto s = shifted_spectrum(t);
  CHECK(s.n_max == 3);
  CHECK(s[0] == 0.0);
  CHECK(s[1] == 0.5);
  CHECK(s[2] == 0.75);

  const auto v = ladder_eigenvector(t, {0.5, 0.0}, 4);
  const auto m = build_ladder_matrices(t, 4);
  Eigen::VectorXcd x(4);
  for (int i = 0; i < 4; ++i) x(i) = v[static_cast<std::size_t>(i)];
  const Eigen::VectorXcd lowered = m.b_minus.cast<complex>() * x;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(lowered(i) - 0.5 * x(i)) < 1e-15);
}

TEST_CASE("degenerate levels") {
  SpectrumTable t = scaling_spectrum(0.5, 1.0, 4);
  t.levels[3] = t.levels[2];
  try {
    coherent_recursive(t, {0.1, 0.0}, 4);
    FAIL("expected degenerate-levels");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateLevels);
  }
}
