#include "siqm/eigensolver.hpp"

#include <lapacke.h>

#include <cmath>
#include <string>
#include <vector>

#include "siqm/error.hpp"

namespace siqm {

namespace {

// Eigenvector for a known eigenvalue by shifted inverse iteration on the
// general band LU factorization. Avoids the dense n x n transformation
// matrix dsbevx would need in vector mode.
Eigen::VectorXd inverse_iteration(const BandedSymmetricMatrix& m, double lambda,
                                  const Eigen::MatrixXd& previous, Eigen::Index n_previous) {
  const auto n = static_cast<lapack_int>(m.size());
  const auto kd = static_cast<lapack_int>(m.bandwidth());
  const lapack_int ldab = 3 * kd + 1;

  const double scale = std::max(1.0, std::abs(lambda));
  const double shift = lambda + 1e-10 * scale;

  std::vector<double> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(n), 0.0);
  for (lapack_int j = 0; j < n; ++j) {
    const lapack_int lo = std::max<lapack_int>(0, j - kd);
    const lapack_int hi = std::min<lapack_int>(n - 1, j + kd);
    for (lapack_int i = lo; i <= hi; ++i) {
      double v = m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (i == j) v -= shift;
      ab[static_cast<std::size_t>(2 * kd + i - j + j * ldab)] = v;
    }
  }
  std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
  lapack_int info = LAPACKE_dgbtrf(LAPACK_COL_MAJOR, n, n, kd, kd, ab.data(), ldab, ipiv.data());
  if (info < 0) throw Error(ErrorKind::EigensolverFailure, "dgbtrf failed: " + std::to_string(info));

  Eigen::VectorXd x(n);
  for (lapack_int i = 0; i < n; ++i) x(i) = 1.0 + 0.01 * std::sin(0.37 * static_cast<double>(i));
  x.normalize();
  for (int iter = 0; iter < 4; ++iter) {
    info = LAPACKE_dgbtrs(LAPACK_COL_MAJOR, 'N', n, kd, kd, 1, ab.data(), ldab, ipiv.data(), x.data(), n);
    if (info != 0) throw Error(ErrorKind::EigensolverFailure, "dgbtrs failed: " + std::to_string(info));
    for (Eigen::Index p = 0; p < n_previous; ++p) x -= previous.col(p).dot(x) * previous.col(p);
    const double norm = x.norm();
    if (!std::isfinite(norm) || norm == 0.0) {
      throw Error(ErrorKind::EigensolverFailure, "inverse iteration produced a degenerate vector");
    }
    x /= norm;
  }
  if (x.sum() < 0.0) x = -x;
  return x;
}

}  // namespace

BandedEigenpairs lowest_eigenpairs(const BandedSymmetricMatrix& m, std::size_t k) {
  const auto n = static_cast<lapack_int>(m.size());
  const auto kd = static_cast<lapack_int>(m.bandwidth());
  if (k == 0 || static_cast<lapack_int>(k) > n) {
    throw Error(ErrorKind::InvalidParameter, "requested eigenpair count out of range");
  }

  std::vector<double> ab = m.band();
  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<lapack_int> ifail(static_cast<std::size_t>(n));
  double q_unused = 0.0;
  double z_unused = 0.0;
  lapack_int found = 0;

  const lapack_int info = LAPACKE_dsbevx(LAPACK_COL_MAJOR, 'N', 'I', 'U', n, kd, ab.data(), kd + 1,
                                         &q_unused, 1, 0.0, 0.0, 1, static_cast<lapack_int>(k),
                                         2.0 * LAPACKE_dlamch('S'), &found, w.data(), &z_unused, 1,
                                         ifail.data());
  if (info != 0 || found != static_cast<lapack_int>(k)) {
    throw Error(ErrorKind::EigensolverFailure,
                "dsbevx returned info=" + std::to_string(info) + ", found " + std::to_string(found));
  }

  BandedEigenpairs out;
  out.values = Eigen::Map<const Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(k));
  out.vectors.resize(n, static_cast<Eigen::Index>(k));
  for (Eigen::Index c = 0; c < static_cast<Eigen::Index>(k); ++c) {
    out.vectors.col(c) = inverse_iteration(m, out.values(c), out.vectors, c);
  }
  return out;
}

}  // namespace siqm
