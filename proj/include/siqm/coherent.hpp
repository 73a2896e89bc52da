#pragma once

// Coherent states sum_n h_n |n> of shape-invariant spectra.
//
// h_n = z^n / [E_n (E_n - E_{n-1}) ... (E_n - E_1)]^{1/2}.
//
// For q != 1 these are not eigenvectors of the c-number ladder matrix B- of
// ladder.hpp. Lowering also moves the parameter a1 -> a2, and with it the
// spectrum E_j -> E'_j = E_{j+1} - E_1, so the faithful statement is
//
//   sqrt(E_n) h_n(E; z) = z h'_{n-1}(E'; z)
//
// which is what coherent_property_residuals checks. At q = 1 (E' = E) it is
// the ordinary eigenvalue equation.

#include <vector>

#include <Eigen/Dense>

#include "siqm/grid.hpp"
#include "siqm/ladder.hpp"
#include "siqm/spectra.hpp"

namespace siqm {

// (z; q)_n = prod_{j<n} (1 - z q^j).
double q_pochhammer(double z, double q, int n);

struct CoherentState {
  complex z{0.0, 0.0};
  int N = 0;
  std::vector<complex> coefficients;  // scale * h_n
  SpectrumTable levels;
  double scale = 1.0;  // != 1 after normalization
  bool normalized = false;

  Eigen::VectorXcd vector() const;
};

CoherentState coherent_recursive(const SpectrumTable& levels, complex z, int N);

inline constexpr double kClosedFormTolerance = 1e-12;

// Closed form with the q-shifted factorial; asserts agreement with
// coherent_recursive on the matching spectrum to kClosedFormTolerance
// relative, widened where the recursion itself is ill-conditioned (small q).
CoherentState coherent_closed_scaling(double q, double r1, complex z, int N);

CoherentState normalize(const CoherentState& state);

// E'_j = E_{j+1} - E_1, the spectrum after one lowering step.
SpectrumTable shifted_spectrum(const SpectrumTable& levels);

// d/dz of the coefficients, n z^{n-1} / norm_n.
std::vector<complex> coherent_derivative(const SpectrumTable& levels, complex z, int N);

// Truncated eigenvector of the c-number matrix B-: z^n / sqrt(E_1 ... E_n).
std::vector<complex> ladder_eigenvector(const SpectrumTable& levels, complex z, int N);

struct CoherentResiduals {
  double eigen_residual = 0.0;       // ||B- h - z h'|| / ||h||, components 0..N-2
  double derivative_residual = 0.0;  // ||B- dh - z dh' - h'|| / ||h'||
  double termwise_defect = 0.0;      // max_n |sqrt(E_n) h_n - z h'_{n-1}| / |sqrt(E_n) h_n|
  double literal_eigen_residual = 0.0;  // ||B- h - z h|| / ||h|| with the c-number matrix
};

CoherentResiduals coherent_property_residuals(const CoherentState& state, const LadderMatrices& ladder);

}  // namespace siqm
