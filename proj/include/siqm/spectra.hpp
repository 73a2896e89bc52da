#pragma once

// Energy levels from remainder partial sums, ladder-built eigenfunctions and
// the finite-difference diagonalization used as an independent oracle.

#include <vector>

#include "siqm/families.hpp"
#include "siqm/grid.hpp"

namespace siqm {

struct SpectrumTable {
  std::vector<double> levels;  // E_0 = 0, E_1, ..., E_nmax
  FamilyDescriptor family;
  int n_max = 0;

  double operator[](int n) const { return levels[static_cast<std::size_t>(n)]; }
};

// E_n = R(a_1) + ... + R(a_n). Scaling families are also checked against
// c a1 (1 - q^n) / (1 - q). Throws level-not-bound past the last Morse level.
SpectrumTable energy_levels(const PotentialFamily& family, int n_max);

// Oscillator-like table E_n = R1 (1 - q^n) / (1 - q) (n R1 at q = 1) without a
// family behind it.
SpectrumTable scaling_spectrum(double q, double r1, int n_max);

// [E_n (E_n - E_{n-1}) ... (E_n - E_1)]^{1/2}; 1 for n = 0.
double normalization_factor(const SpectrumTable& levels, int n);

struct EigenstateBuild {
  WaveFunctionGrid psi;  // unit norm
  double raw_norm = 0.0;       // ||A^dag(a1) ... A^dag(an) psi0(a_{n+1})||
  double expected_norm = 0.0;  // normalization_factor
};

// Relative mismatch between raw and expected norm above which the grid is
// reported as under-resolved.
inline constexpr double kUnderResolvedTolerance = 1e-3;

EigenstateBuild build_eigenstate_detailed(const PotentialFamily& family, int n, const Grid& grid,
                                          StencilOrder order = StencilOrder::Fourth);

WaveFunctionGrid build_eigenstate(const PotentialFamily& family, int n, const Grid& grid,
                                  StencilOrder order = StencilOrder::Fourth);

struct FdSpectrum {
  std::vector<double> energies;  // relative to the lowest
  double ground_offset = 0.0;    // raw lowest eigenvalue
  std::vector<WaveFunctionGrid> states;
  std::vector<double> edge_weights;  // probability in the outer 2% at each end
};

// Edge weight above which fd_diagonalize warns about boundary contamination.
inline constexpr double kEdgeWeightWarning = 1e-8;

FdSpectrum fd_diagonalize(const PotentialFamily& family, const Grid& grid, int k,
                          StencilOrder order = StencilOrder::Fourth);

// Eigen-residual ||H psi - E psi|| on the central 90% of the grid, with
// H = -d^2 + W^2 - W' at a1.
double eigen_residual(const PotentialFamily& family, const WaveFunctionGrid& psi, double energy,
                      StencilOrder order = StencilOrder::Fourth);

}  // namespace siqm
