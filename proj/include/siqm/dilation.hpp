#pragma once

// Dilation-conjugated ladder operators of the self-similar family.
//
//   A(sqrt(q) x) = W(sqrt(q) x; a1) + q^{-1/2} d/dx
//   C   f = A D_{1/sqrt(q)} f          C^dag f = D_{sqrt(q)} A^dag f
//
// with the unitary dilation (D_s f)(x) = sqrt(s) f(s x). Both identities
//
//   A A^dag - q A^dag(sqrt(q) x) A(sqrt(q) x) = R(a1)
//   C C^dag - q C^dag C                      = R(a1)
//
// reduce to shape invariance at q = 1.

#include <string>
#include <vector>

#include "siqm/families.hpp"
#include "siqm/grid.hpp"

namespace siqm {

enum class DilationIdentity { Direct, Conjugated };  // yy3 / yy6

std::string to_string(DilationIdentity which);

struct DilationOptions {
  StencilOrder order = StencilOrder::Fourth;
  int interp_points = 8;
  double interior_fraction = 0.9;
};

// (LHS f) for the chosen identity, before subtracting R(a1) f.
WaveFunctionGrid dilation_lhs(const PotentialFamily& family, const WaveFunctionGrid& f, DilationIdentity which,
                              const DilationOptions& options = {});

// max_f ||(LHS - R(a1)) f|| / ||f|| on the interior of the grid.
double dilation_identity_residual(const PotentialFamily& family, const Grid& grid, DilationIdentity which,
                                  const std::vector<WaveFunctionGrid>& test_fns, const DilationOptions& options = {});

// Gaussian-type test functions centred near the origin.
std::vector<WaveFunctionGrid> dilation_test_functions(const Grid& grid);

}  // namespace siqm
