#pragma once

// Truncated ladder matrices on the energy eigenbasis |0> ... |N-1>:
//   B+ |n> = sqrt(E_{n+1}) |n+1>,   B- = B+^T,   H = B+ B- = diag(E_n),
//   Q = B- H^{-1/2},  Q^dag = H^{-1/2} B+,
// where H^{-1} and H^{-1/2} are pseudo-inverses vanishing on |0>.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "siqm/spectra.hpp"

namespace siqm {

struct LadderMatrices {
  int dimension = 0;
  Eigen::MatrixXd b_plus;
  Eigen::MatrixXd b_minus;
  Eigen::MatrixXd h;
  Eigen::MatrixXd h_inverse;  // pseudo-inverse
  Eigen::MatrixXd q;
  Eigen::MatrixXd q_dag;
};

// Needs levels.n_max >= N. Throws singular-H when some E_n (n >= 1) vanishes.
LadderMatrices build_ladder_matrices(const SpectrumTable& levels, int N);

struct IdentityCheck {
  std::string id;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct MatrixIdentityReport {
  int dimension = 0;
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

inline constexpr double kMatrixIdentityTolerance = 1e-12;

// Q Q^dag = I and Q^dag Q = I - |0><0| on the N block (products formed at
// N + 1 so the block is free of truncation), B- (H^{-1} B+) = I on rows
// 0 .. N-2, and ||(Q^dag)^n |0>|| = 1 for n < N. Needs levels.n_max >= N.
MatrixIdentityReport matrix_identities(const SpectrumTable& levels, int N);

}  // namespace siqm
