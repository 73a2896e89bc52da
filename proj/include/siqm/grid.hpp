#pragma once

// Uniform 1D grids, complex wavefunctions on them, and the finite-difference
// operators of the factorized Hamiltonian. Units are fixed to hbar = 1 and
// 2m = 1, so A = W + d/dx and A^dagger = W - d/dx.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace siqm {

using complex = std::complex<double>;

struct UnitsConvention {
  static constexpr double hbar = 1.0;
  static constexpr double two_m = 1.0;
};

class Grid {
 public:
  static constexpr std::size_t min_points = 16;

  Grid(double x_min, double x_max, std::size_t n_points);

  double x_min() const { return x_min_; }
  double x_max() const { return x_max_; }
  std::size_t n_points() const { return n_points_; }
  double spacing() const { return spacing_; }
  double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * spacing_; }
  std::vector<double> points() const;

  // Index range covering the central `fraction` of the grid.
  std::pair<std::size_t, std::size_t> interior(double fraction) const;

  bool operator==(const Grid& other) const = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_points_;
  double spacing_;
};

// Validating factory; throws invalid-range / too-few-points.
Grid build_grid(double x_min, double x_max, long long n_points);

// Real function sampled on a grid (superpotentials, potentials).
struct GridSamples {
  Grid grid;
  std::vector<double> values;
};

class WaveFunctionGrid {
 public:
  explicit WaveFunctionGrid(Grid grid);
  WaveFunctionGrid(Grid grid, std::vector<complex> amplitudes);

  const Grid& grid() const { return grid_; }
  std::span<const complex> amplitudes() const { return amplitudes_; }
  std::span<complex> amplitudes() { return amplitudes_; }
  complex operator[](std::size_t i) const { return amplitudes_[i]; }
  complex& operator[](std::size_t i) { return amplitudes_[i]; }
  std::size_t size() const { return amplitudes_.size(); }

  // Trapezoidal L2 norm.
  double norm() const;
  double interior_norm(double fraction) const;
  WaveFunctionGrid normalized() const;

  WaveFunctionGrid& operator+=(const WaveFunctionGrid& other);
  WaveFunctionGrid& operator-=(const WaveFunctionGrid& other);
  WaveFunctionGrid& operator*=(complex factor);

 private:
  Grid grid_;
  std::vector<complex> amplitudes_;
};

WaveFunctionGrid operator+(WaveFunctionGrid lhs, const WaveFunctionGrid& rhs);
WaveFunctionGrid operator-(WaveFunctionGrid lhs, const WaveFunctionGrid& rhs);
WaveFunctionGrid operator*(complex factor, WaveFunctionGrid psi);

// Trapezoidal <phi, psi>, conjugate-linear in phi.
complex inner_product(const WaveFunctionGrid& phi, const WaveFunctionGrid& psi);

template <typename F>
WaveFunctionGrid sample(const Grid& grid, F&& f) {
  WaveFunctionGrid psi(grid);
  for (std::size_t i = 0; i < grid.n_points(); ++i) psi[i] = complex(f(grid.x(i)));
  return psi;
}

template <typename F>
GridSamples sample_real(const Grid& grid, F&& f) {
  GridSamples s{grid, std::vector<double>(grid.n_points())};
  for (std::size_t i = 0; i < grid.n_points(); ++i) s.values[i] = f(grid.x(i));
  return s;
}

enum class StencilOrder { Second = 2, Fourth = 4, Sixth = 6 };

// Finite-difference weights (Fornberg) for derivative `derivative` at `x0`
// from nodes `nodes`.
std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative);

// First derivative: centered stencil of the given order in the bulk, one-sided
// stencils of the same order in the boundary rows.
std::vector<double> differentiate(std::span<const double> f, double h,
                                  StencilOrder order = StencilOrder::Fourth);
std::vector<complex> differentiate(std::span<const complex> f, double h,
                                   StencilOrder order = StencilOrder::Fourth);

enum class LadderMode { Lowering, Raising };

// (W + d/dx) psi for Lowering, (W - d/dx) psi for Raising.
WaveFunctionGrid apply_ladder(const GridSamples& w, const WaveFunctionGrid& psi, LadderMode mode,
                              StencilOrder order = StencilOrder::Fourth);

// Unitary dilation (D_s f)(x) = sqrt(s) f(s x) by Lagrange interpolation with
// `interp_points` nodes (4 = cubic). Samples outside the grid are zero.
WaveFunctionGrid dilate(const WaveFunctionGrid& psi, double s, int interp_points = 4);

// Symmetric banded matrix, upper band stored column-major as LAPACK 'U' band
// storage with leading dimension bandwidth + 1.
class BandedSymmetricMatrix {
 public:
  BandedSymmetricMatrix(std::size_t n, std::size_t bandwidth);

  std::size_t size() const { return n_; }
  std::size_t bandwidth() const { return kd_; }
  double at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

  std::vector<double>& band() { return band_; }
  const std::vector<double>& band() const { return band_; }

  Eigen::MatrixXd to_dense() const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& v) const;

 private:
  std::size_t n_;
  std::size_t kd_;
  std::vector<double> band_;
};

// -d^2/dx^2 + W^2 - W' with Dirichlet walls (values outside the grid vanish).
BandedSymmetricMatrix build_hamiltonian_matrix(const GridSamples& w,
                                               StencilOrder order = StencilOrder::Fourth);

}  // namespace siqm
