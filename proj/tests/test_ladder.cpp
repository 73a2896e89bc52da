#include <cmath>

#include "doctest.h"
#include "siqm/error.hpp"
#include "siqm/ladder.hpp"

using namespace siqm;

TEST_CASE("ladder matrix entries") {
  const auto t = scaling_spectrum(0.5, 1.0, 6);
  const auto m = build_ladder_matrices(t, 5);
  CHECK(m.b_plus(1, 0) == 1.0);
  CHECK(m.b_plus(2, 1) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
  CHECK((m.b_minus - m.b_plus.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m.b_plus * m.b_minus - m.h).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(m.h(3, 3) == 1.75);
  CHECK(m.h_inverse(0, 0) == 0.0);
  CHECK(m.h_inverse(2, 2) == doctest::Approx(1.0 / 1.5));
}

TEST_CASE("matrix identities at small and acceptance size") {
  for (int N : {4, 20}) {
    CAPTURE(N);
    const auto report = matrix_identities(scaling_spectrum(0.5, 1.0, N), N);
    CHECK(report.all_pass());
    CHECK(report.checks.size() == 4);
    for (const auto& c : report.checks) CHECK(c.residual <= 1e-12);
  }
}

TEST_CASE("Q^dag Q misses only the vacuum") {
  const int N = 6;
  const auto t = scaling_spectrum(0.5, 1.0, N + 1);
  const auto m = build_ladder_matrices(t, N + 1);
  const Eigen::MatrixXd defect =
      (m.q_dag * m.q).topLeftCorner(N, N) - Eigen::MatrixXd::Identity(N, N);
  CHECK(defect(0, 0) == doctest::Approx(-1.0));
  Eigen::MatrixXd rest = defect;
  rest(0, 0) = 0.0;
  CHECK(rest.cwiseAbs().maxCoeff() < 1e-14);

  Eigen::VectorXd v = Eigen::VectorXd::Zero(N + 1);
  v(0) = 1.0;
  for (int n = 0; n < 3; ++n) v = m.q_dag * v;
  CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(v(3)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("singular Hamiltonian") {
  SpectrumTable t = scaling_spectrum(0.5, 1.0, 5);
  t.levels[2] = 0.0;
  try {
    build_ladder_matrices(t, 4);
    FAIL("expected singular-H");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularHamiltonian);
  }
}
