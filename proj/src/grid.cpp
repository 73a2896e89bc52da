#include "siqm/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

namespace diagnostics {
namespace {

thread_local Sink current_sink = nullptr;
thread_local void* current_user = nullptr;

}  // namespace

void warn(std::string_view message) {
  if (current_sink != nullptr) {
    current_sink(message, current_user);
  }
}

ScopedSink::ScopedSink(Sink sink, void* user)
    : previous_sink_(current_sink), previous_user_(current_user) {
  current_sink = sink;
  current_user = user;
}

ScopedSink::~ScopedSink() {
  current_sink = previous_sink_;
  current_user = previous_user_;
}

}  // namespace diagnostics

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
  if (!(x_min < x_max) || !std::isfinite(x_min) || !std::isfinite(x_max)) {
    std::ostringstream os;
    os << "x_min (" << x_min << ") must be below x_max (" << x_max << ")";
    throw Error(ErrorKind::InvalidRange, os.str());
  }
  if (n_points < min_points) {
    std::ostringstream os;
    os << "grid needs at least " << min_points << " points, got " << n_points;
    throw Error(ErrorKind::TooFewPoints, os.str());
  }
  spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) xs[i] = x(i);
  return xs;
}

std::pair<std::size_t, std::size_t> Grid::interior(double fraction) const {
  const auto skip = static_cast<std::size_t>(
      std::floor(0.5 * (1.0 - fraction) * static_cast<double>(n_points_)));
  return {skip, n_points_ - skip};
}

Grid build_grid(double x_min, double x_max, long long n_points) {
  if (!(x_min < x_max)) {
    std::ostringstream os;
    os << "x_min (" << x_min << ") must be below x_max (" << x_max << ")";
    throw Error(ErrorKind::InvalidRange, os.str());
  }
  if (n_points < static_cast<long long>(Grid::min_points)) {
    std::ostringstream os;
    os << "grid needs at least " << Grid::min_points << " points, got " << n_points;
    throw Error(ErrorKind::TooFewPoints, os.str());
  }
  return Grid(x_min, x_max, static_cast<std::size_t>(n_points));
}

WaveFunctionGrid::WaveFunctionGrid(Grid grid)
    : grid_(grid), amplitudes_(grid.n_points(), complex(0.0, 0.0)) {}

WaveFunctionGrid::WaveFunctionGrid(Grid grid, std::vector<complex> amplitudes)
    : grid_(grid), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != grid_.n_points()) {
    throw Error(ErrorKind::GridMismatch, "amplitude count differs from grid size");
  }
}

namespace {

double trapezoid_sq(std::span<const complex> a, double h, std::size_t lo, std::size_t hi) {
  if (hi <= lo + 1) return 0.0;
  double sum = 0.5 * (std::norm(a[lo]) + std::norm(a[hi - 1]));
  for (std::size_t i = lo + 1; i + 1 < hi; ++i) sum += std::norm(a[i]);
  return sum * h;
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw Error(ErrorKind::GridMismatch, "operands live on different grids");
}

}  // namespace

double WaveFunctionGrid::norm() const {
  return std::sqrt(trapezoid_sq(amplitudes_, grid_.spacing(), 0, amplitudes_.size()));
}

double WaveFunctionGrid::interior_norm(double fraction) const {
  auto [lo, hi] = grid_.interior(fraction);
  return std::sqrt(trapezoid_sq(amplitudes_, grid_.spacing(), lo, hi));
}

WaveFunctionGrid WaveFunctionGrid::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::NonNormalizable, "wavefunction has zero or non-finite norm");
  }
  return complex(1.0 / n) * WaveFunctionGrid(*this);
}

WaveFunctionGrid& WaveFunctionGrid::operator+=(const WaveFunctionGrid& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

WaveFunctionGrid& WaveFunctionGrid::operator-=(const WaveFunctionGrid& other) {
  require_same_grid(grid_, other.grid_);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] -= other.amplitudes_[i];
  return *this;
}

WaveFunctionGrid& WaveFunctionGrid::operator*=(complex factor) {
  for (auto& a : amplitudes_) a *= factor;
  return *this;
}

WaveFunctionGrid operator+(WaveFunctionGrid lhs, const WaveFunctionGrid& rhs) { return lhs += rhs; }
WaveFunctionGrid operator-(WaveFunctionGrid lhs, const WaveFunctionGrid& rhs) { return lhs -= rhs; }
WaveFunctionGrid operator*(complex factor, WaveFunctionGrid psi) { return psi *= factor; }

complex inner_product(const WaveFunctionGrid& phi, const WaveFunctionGrid& psi) {
  require_same_grid(phi.grid(), psi.grid());
  const std::size_t n = phi.size();
  complex sum = 0.5 * (std::conj(phi[0]) * psi[0] + std::conj(phi[n - 1]) * psi[n - 1]);
  for (std::size_t i = 1; i + 1 < n; ++i) sum += std::conj(phi[i]) * psi[i];
  return sum * phi.grid().spacing();
}

std::vector<double> fd_weights(double x0, std::span<const double> nodes, int derivative) {
  const int n = static_cast<int>(nodes.size());
  const int m = derivative;
  std::vector<std::vector<double>> c(static_cast<std::size_t>(m + 1),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[static_cast<std::size_t>(m)];
}

namespace {

// Row stencils for the first derivative on n points, unit spacing. Rows in
// the bulk share one centered stencil; the first and last order/2 rows use
// shifted windows of the same width.
class FirstDerivativeStencil {
 public:
  FirstDerivativeStencil(std::size_t n, StencilOrder order)
      : n_(n), width_(static_cast<std::size_t>(order) + 1) {
    if (n_ < width_) throw Error(ErrorKind::TooFewPoints, "grid narrower than stencil");
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t start = window_start(i);
      const long long offset = static_cast<long long>(i) - static_cast<long long>(start);
      if (weights_.count(offset) != 0) continue;
      std::vector<double> nodes(width_);
      for (std::size_t j = 0; j < width_; ++j) {
        nodes[j] = static_cast<double>(static_cast<long long>(j) - offset);
      }
      weights_[offset] = fd_weights(0.0, nodes, 1);
    }
  }

  template <typename T>
  std::vector<T> apply(std::span<const T> f, double h) const {
    std::vector<T> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t start = window_start(i);
      const auto& w = weights_.at(static_cast<long long>(i) - static_cast<long long>(start));
      T acc{};
      for (std::size_t j = 0; j < width_; ++j) acc += w[j] * f[start + j];
      out[i] = acc / h;
    }
    return out;
  }

 private:
  std::size_t window_start(std::size_t i) const {
    const std::size_t half = (width_ - 1) / 2;
    if (i < half) return 0;
    return std::min(i - half, n_ - width_);
  }

  std::size_t n_;
  std::size_t width_;
  std::map<long long, std::vector<double>> weights_;
};

}  // namespace

std::vector<double> differentiate(std::span<const double> f, double h, StencilOrder order) {
  return FirstDerivativeStencil(f.size(), order).apply(f, h);
}

std::vector<complex> differentiate(std::span<const complex> f, double h, StencilOrder order) {
  return FirstDerivativeStencil(f.size(), order).apply(f, h);
}

WaveFunctionGrid apply_ladder(const GridSamples& w, const WaveFunctionGrid& psi, LadderMode mode,
                              StencilOrder order) {
  if (!(w.grid == psi.grid()) || w.values.size() != psi.size()) {
    throw Error(ErrorKind::GridMismatch, "superpotential and wavefunction grids differ");
  }
  const auto dpsi = differentiate(psi.amplitudes(), psi.grid().spacing(), order);
  const double sign = mode == LadderMode::Lowering ? 1.0 : -1.0;
  WaveFunctionGrid out(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) out[i] = w.values[i] * psi[i] + sign * dpsi[i];
  return out;
}

WaveFunctionGrid dilate(const WaveFunctionGrid& psi, double s, int interp_points) {
  if (!(s > 0.0)) throw Error(ErrorKind::InvalidParameter, "dilation factor must be positive");
  if (interp_points < 2) throw Error(ErrorKind::InvalidParameter, "need at least 2 interpolation points");
  if (s == 1.0) return psi;

  const Grid& g = psi.grid();
  const auto n = static_cast<long long>(g.n_points());
  const auto m = static_cast<long long>(interp_points);
  const double h = g.spacing();
  const double scale = std::sqrt(s);

  double peak = 0.0;
  for (const auto& a : psi.amplitudes()) peak = std::max(peak, std::abs(a));
  const double edge = std::max(std::abs(psi[0]), std::abs(psi[psi.size() - 1]));
  bool sampled_outside = false;

  WaveFunctionGrid out(g);
  std::vector<double> nodes(static_cast<std::size_t>(m));
  for (long long i = 0; i < n; ++i) {
    const double xs = s * g.x(static_cast<std::size_t>(i));
    const double u = (xs - g.x_min()) / h;
    if (u < -1e-12 || u > static_cast<double>(n - 1) + 1e-12) {
      sampled_outside = true;
      continue;
    }
    long long base = static_cast<long long>(std::floor(u)) - (m / 2 - 1);
    base = std::clamp(base, 0LL, n - m);
    for (long long j = 0; j < m; ++j) nodes[static_cast<std::size_t>(j)] = static_cast<double>(base + j);
    const auto w = fd_weights(u, nodes, 0);
    complex acc = 0.0;
    for (long long j = 0; j < m; ++j) acc += w[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(base + j)];
    out[static_cast<std::size_t>(i)] = scale * acc;
  }
  if (sampled_outside && edge > 1e-8 * peak) {
    std::ostringstream os;
    os << "dilate: wavefunction not negligible at the boundary (|psi_edge|/max = " << edge / peak
       << "); zero-filled samples are inaccurate";
    diagnostics::warn(os.str());
  }
  return out;
}

BandedSymmetricMatrix::BandedSymmetricMatrix(std::size_t n, std::size_t bandwidth)
    : n_(n), kd_(bandwidth), band_((bandwidth + 1) * n, 0.0) {}

double BandedSymmetricMatrix::at(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j - i > kd_) return 0.0;
  return band_[(kd_ + i - j) + j * (kd_ + 1)];
}

void BandedSymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i > j) std::swap(i, j);
  if (j - i > kd_) throw Error(ErrorKind::InvalidParameter, "entry outside band");
  band_[(kd_ + i - j) + j * (kd_ + 1)] = value;
}

Eigen::MatrixXd BandedSymmetricMatrix::to_dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t i = (j > kd_ ? j - kd_ : 0); i <= j; ++i) {
      const double v = at(i, j);
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }
  return m;
}

Eigen::VectorXd BandedSymmetricMatrix::multiply(const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t lo = i > kd_ ? i - kd_ : 0;
    const std::size_t hi = std::min(n_ - 1, i + kd_);
    double acc = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) acc += at(i, j) * v(static_cast<Eigen::Index>(j));
    out(static_cast<Eigen::Index>(i)) = acc;
  }
  return out;
}

BandedSymmetricMatrix build_hamiltonian_matrix(const GridSamples& w, StencilOrder order) {
  const Grid& g = w.grid;
  if (w.values.size() != g.n_points()) {
    throw Error(ErrorKind::GridMismatch, "superpotential samples differ from grid size");
  }
  const std::size_t n = g.n_points();
  const std::size_t half = static_cast<std::size_t>(order) / 2;
  const double h = g.spacing();

  std::vector<double> nodes(2 * half + 1);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    nodes[j] = static_cast<double>(static_cast<long long>(j) - static_cast<long long>(half));
  }
  const auto d2 = fd_weights(0.0, nodes, 2);
  const auto dw = differentiate(std::span<const double>(w.values), h, order);

  BandedSymmetricMatrix m(n, half);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = w.values[i] * w.values[i] - dw[i];
    m.set(i, i, -d2[half] / (h * h) + v);
    for (std::size_t k = 1; k <= half && i + k < n; ++k) m.set(i, i + k, -d2[half + k] / (h * h));
  }
  return m;
}

}  // namespace siqm
