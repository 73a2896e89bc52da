#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "siqm/grid.hpp"

namespace siqm {

struct BandedEigenpairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, unit Euclidean norm
};

// Lowest k eigenpairs of a symmetric banded matrix (LAPACK dsbevx, bisection
// plus inverse iteration). Throws eigensolver-failure on LAPACK errors.
BandedEigenpairs lowest_eigenpairs(const BandedSymmetricMatrix& m, std::size_t k);

}  // namespace siqm
