#include "siqm/ladder.hpp"

#include <cmath>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

LadderMatrices build_ladder_matrices(const SpectrumTable& levels, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "ladder dimension must be positive");
  if (levels.n_max < N - 1) throw Error(ErrorKind::InvalidParameter, "spectrum table shorter than the ladder");
  for (int n = 1; n < N; ++n) {
    if (!(levels[n] > 0.0)) {
      std::ostringstream os;
      os << "E_" << n << " = " << levels[n] << " leaves H without an inverse off the ground state";
      throw Error(ErrorKind::SingularHamiltonian, os.str());
    }
  }

  LadderMatrices m;
  m.dimension = N;
  const Eigen::Index d = N;
  m.b_plus = Eigen::MatrixXd::Zero(d, d);
  m.h = Eigen::MatrixXd::Zero(d, d);
  m.h_inverse = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd h_inv_sqrt = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index n = 0; n + 1 < d; ++n) m.b_plus(n + 1, n) = std::sqrt(levels[static_cast<int>(n) + 1]);
  for (Eigen::Index n = 0; n < d; ++n) {
    const double e = levels[static_cast<int>(n)];
    m.h(n, n) = e;
    if (n > 0) {
      m.h_inverse(n, n) = 1.0 / e;
      h_inv_sqrt(n, n) = 1.0 / std::sqrt(e);
    }
  }
  m.b_minus = m.b_plus.transpose();
  m.q = m.b_minus * h_inv_sqrt;
  m.q_dag = h_inv_sqrt * m.b_plus;
  return m;
}

bool MatrixIdentityReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

MatrixIdentityReport matrix_identities(const SpectrumTable& levels, int N) {
  if (N < 3) throw Error(ErrorKind::InvalidParameter, "matrix identities need N >= 3");
  const LadderMatrices big = build_ladder_matrices(levels, N + 1);
  const LadderMatrices m = build_ladder_matrices(levels, N);
  const Eigen::Index d = N;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);

  MatrixIdentityReport report;
  report.dimension = N;
  auto add = [&](std::string id_name, double residual) {
    report.checks.push_back({std::move(id_name), residual, kMatrixIdentityTolerance,
                             residual <= kMatrixIdentityTolerance});
  };

  const Eigen::MatrixXd qqd = (big.q * big.q_dag).topLeftCorner(d, d);
  add("q-qdag-identity", (qqd - id).cwiseAbs().maxCoeff());

  Eigen::MatrixXd projector = id;
  projector(0, 0) = 0.0;
  const Eigen::MatrixXd qdq = (big.q_dag * big.q).topLeftCorner(d, d);
  add("qdag-q-projector", (qdq - projector).cwiseAbs().maxCoeff());

  const Eigen::MatrixXd right_inverse = m.b_minus * (m.h_inverse * m.b_plus);
  add("right-inverse", (right_inverse - id).topLeftCorner(d - 1, d - 1).cwiseAbs().maxCoeff());

  double worst = 0.0;
  Eigen::VectorXd state = Eigen::VectorXd::Zero(d);
  state(0) = 1.0;
  for (int n = 1; n < N; ++n) {
    state = m.q_dag * state;
    worst = std::max(worst, std::abs(state.norm() - 1.0));
  }
  add("excited-state-norm", worst);
  return report;
}

}  // namespace siqm
