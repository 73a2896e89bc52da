#include "siqm/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

double q_pochhammer(double z, double q, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "q-Pochhammer needs n >= 0");
  double product = 1.0;
  if (z > 0.0 && q > 0.0) {
    // 1 - z q^j through expm1 keeps the factors accurate as z q^j -> 1.
    const double lz = std::log(z);
    const double lq = std::log(q);
    for (int j = 0; j < n; ++j) product *= -std::expm1(lz + j * lq);
    return product;
  }
  double zq = z;
  for (int j = 0; j < n; ++j) {
    product *= 1.0 - zq;
    zq *= q;
  }
  return product;
}

Eigen::VectorXcd CoherentState::vector() const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(coefficients.size()));
  for (std::size_t i = 0; i < coefficients.size(); ++i) v(static_cast<Eigen::Index>(i)) = coefficients[i];
  return v;
}

CoherentState coherent_recursive(const SpectrumTable& levels, complex z, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "coherent state needs N >= 1");
  if (levels.n_max < N - 1) throw Error(ErrorKind::InvalidParameter, "spectrum table shorter than the truncation");
  for (int n = 1; n < N; ++n) {
    for (int j = 0; j < n; ++j) {
      if (levels[n] == levels[j]) {
        std::ostringstream os;
        os << "E_" << n << " equals E_" << j;
        throw Error(ErrorKind::DegenerateLevels, os.str());
      }
    }
  }
  CoherentState s;
  s.z = z;
  s.N = N;
  s.levels = levels;
  s.coefficients.resize(static_cast<std::size_t>(N));
  complex zn = 1.0;
  for (int n = 0; n < N; ++n) {
    s.coefficients[static_cast<std::size_t>(n)] = zn / normalization_factor(levels, n);
    zn *= z;
  }
  return s;
}

CoherentState coherent_closed_scaling(double q, double r1, complex z, int N) {
  if (!(q > 0.0 && q < 1.0)) throw Error(ErrorKind::InvalidParameter, "closed form needs 0 < q < 1");
  if (!(r1 > 0.0)) throw Error(ErrorKind::InvalidParameter, "closed form needs R1 > 0");
  if (N < 1) throw Error(ErrorKind::InvalidParameter, "coherent state needs N >= 1");

  CoherentState s;
  s.z = z;
  s.N = N;
  s.levels = scaling_spectrum(q, r1, N - 1);
  s.coefficients.resize(static_cast<std::size_t>(N));
  complex zn = 1.0;
  for (int n = 0; n < N; ++n) {
    const double nd = n;
    const double factor = std::pow(1.0 - q, 0.5 * nd) * std::pow(q, -0.25 * nd * (nd - 1.0)) /
                          (std::pow(r1, 0.5 * nd) * std::sqrt(q_pochhammer(q, q, n)));
    s.coefficients[static_cast<std::size_t>(n)] = zn * factor;
    zn *= z;
  }

  // The recursion subtracts nearby levels, so its own error grows like
  // eps * sum_j (E_n + E_j) / (E_n - E_j); the check allows for that.
  const CoherentState check = coherent_recursive(s.levels, z, N);
  for (int n = 0; n < N; ++n) {
    const complex a = s.coefficients[static_cast<std::size_t>(n)];
    const complex b = check.coefficients[static_cast<std::size_t>(n)];
    double cond = 1.0;
    for (int j = 1; j < n; ++j) cond += (s.levels[n] + s.levels[j]) / (s.levels[n] - s.levels[j]);
    const double tol = std::max(kClosedFormTolerance, 4.0 * std::numeric_limits<double>::epsilon() * cond);
    if (std::abs(a - b) > tol * std::abs(b)) {
      std::ostringstream os;
      os << "closed-form coefficient h_" << n << " = " << a << " disagrees with the recursive " << b;
      throw Error(ErrorKind::NumericalFailure, os.str());
    }
  }
  return s;
}

CoherentState normalize(const CoherentState& state) {
  double sum = 0.0;
  for (const auto& c : state.coefficients) sum += std::norm(c);
  if (!(sum > 0.0) || !std::isfinite(sum)) throw Error(ErrorKind::NonNormalizable, "coherent state has no finite norm");
  CoherentState out = state;
  const double f = 1.0 / std::sqrt(sum);
  for (auto& c : out.coefficients) c *= f;
  out.scale = state.scale * f;
  out.normalized = true;
  return out;
}

SpectrumTable shifted_spectrum(const SpectrumTable& levels) {
  if (levels.n_max < 1) throw Error(ErrorKind::InvalidParameter, "shifted spectrum needs n_max >= 1");
  SpectrumTable out = levels;
  out.n_max = levels.n_max - 1;
  out.levels.assign(static_cast<std::size_t>(out.n_max) + 1, 0.0);
  for (int j = 0; j <= out.n_max; ++j) out.levels[static_cast<std::size_t>(j)] = levels[j + 1] - levels[1];
  return out;
}

std::vector<complex> ladder_eigenvector(const SpectrumTable& levels, complex z, int N) {
  if (N < 1 || levels.n_max < N - 1) throw Error(ErrorKind::InvalidParameter, "spectrum table shorter than N");
  std::vector<complex> v(static_cast<std::size_t>(N));
  v[0] = 1.0;
  for (int n = 1; n < N; ++n) v[static_cast<std::size_t>(n)] = v[static_cast<std::size_t>(n) - 1] * z / std::sqrt(levels[n]);
  return v;
}

std::vector<complex> coherent_derivative(const SpectrumTable& levels, complex z, int N) {
  if (N < 1 || levels.n_max < N - 1) throw Error(ErrorKind::InvalidParameter, "spectrum table shorter than N");
  std::vector<complex> d(static_cast<std::size_t>(N), 0.0);
  complex zn = 1.0;  // z^{n-1}
  for (int n = 1; n < N; ++n) {
    d[static_cast<std::size_t>(n)] = static_cast<double>(n) * zn / normalization_factor(levels, n);
    zn *= z;
  }
  return d;
}

namespace {

Eigen::VectorXcd to_vector(const std::vector<complex>& c, Eigen::Index size) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(size);
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return v;
}

double restricted_norm(const Eigen::VectorXcd& v, Eigen::Index count) { return v.head(count).norm(); }

}  // namespace

CoherentResiduals coherent_property_residuals(const CoherentState& state, const LadderMatrices& ladder) {
  const int N = state.N;
  if (N < 4) throw Error(ErrorKind::InvalidParameter, "coherent residuals need N >= 4");
  if (ladder.dimension != N) throw Error(ErrorKind::InvalidParameter, "ladder dimension differs from the truncation");
  const Eigen::Index m = N - 1;  // components 0 .. N-2
  const SpectrumTable shifted = shifted_spectrum(state.levels);
  const complex z = state.z;

  const Eigen::VectorXcd h = state.vector();
  const Eigen::VectorXcd hp = to_vector(coherent_recursive(shifted, z, N - 1).coefficients, N) * state.scale;
  const Eigen::MatrixXcd bm = ladder.b_minus.cast<complex>();

  CoherentResiduals r;
  const double h_norm = restricted_norm(h, m);
  const Eigen::VectorXcd lowered = bm * h;
  r.eigen_residual = restricted_norm(lowered - z * hp, m) / h_norm;
  r.literal_eigen_residual = restricted_norm(lowered - z * h, m) / h_norm;
  for (Eigen::Index n = 0; n < m; ++n) {
    const double denom = std::abs(lowered(n));
    if (denom > 0.0) r.termwise_defect = std::max(r.termwise_defect, std::abs(lowered(n) - z * hp(n)) / denom);
  }

  const Eigen::VectorXcd dh = to_vector(coherent_derivative(state.levels, z, N), N) * state.scale;
  const Eigen::VectorXcd dhp = to_vector(coherent_derivative(shifted, z, N - 1), N) * state.scale;
  r.derivative_residual = restricted_norm(bm * dh - z * dhp - hp, m) / restricted_norm(hp, m);
  return r;
}

}  // namespace siqm
