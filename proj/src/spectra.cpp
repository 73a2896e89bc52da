#include "siqm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "siqm/eigensolver.hpp"
#include "siqm/error.hpp"

namespace siqm {

namespace {

void check_scaling_closed_form(const SpectrumTable& table, double q, double r1) {
  for (int n = 1; n <= table.n_max; ++n) {
    const double closed = q == 1.0 ? n * r1 : -r1 * std::expm1(n * std::log(q)) / (1.0 - q);
    if (std::abs(table[n] - closed) > 1e-12 * std::max(1.0, std::abs(closed))) {
      std::ostringstream os;
      os << "partial sum E_" << n << " = " << table[n] << " disagrees with closed form " << closed;
      throw Error(ErrorKind::NumericalFailure, os.str());
    }
  }
}

}  // namespace

SpectrumTable energy_levels(const PotentialFamily& family, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidParameter, "n_max must be non-negative");
  const int bound = family.max_bound_level();
  if (bound >= 0 && n_max > bound) {
    std::ostringstream os;
    os << "level " << n_max << " is not bound for " << to_string(family.name()) << " with a1 = "
       << family.a1() << " (last bound level " << bound << ")";
    throw Error(ErrorKind::LevelNotBound, os.str());
  }

  SpectrumTable table;
  table.family = family.descriptor();
  table.n_max = n_max;
  table.levels.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  const ParameterChain chain = parameter_chain(family, std::max(n_max, 1));
  double sum = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    sum += family.remainder(chain.values[static_cast<std::size_t>(n) - 1]);
    table.levels[static_cast<std::size_t>(n)] = sum;
  }
  if (family.rule().kind == RuleKind::Scaling) {
    check_scaling_closed_form(table, family.q(), family.remainder(family.a1()));
  }
  return table;
}

SpectrumTable scaling_spectrum(double q, double r1, int n_max) {
  if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidParameter, "scaling spectrum requires 0 < q <= 1");
  if (!(r1 > 0.0)) throw Error(ErrorKind::InvalidParameter, "scaling spectrum requires R1 > 0");
  if (n_max < 0) throw Error(ErrorKind::InvalidParameter, "n_max must be non-negative");
  SpectrumTable table;
  table.family.name = FamilyName::SelfSimilar;
  table.family.q = q;
  table.family.c = r1;
  table.family.a1 = 1.0;
  table.n_max = n_max;
  table.levels.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  double sum = 0.0;
  double r = r1;
  for (int n = 1; n <= n_max; ++n) {
    sum += r;
    r *= q;
    table.levels[static_cast<std::size_t>(n)] = sum;
  }
  check_scaling_closed_form(table, q, r1);
  return table;
}

double normalization_factor(const SpectrumTable& levels, int n) {
  if (n < 0 || n > levels.n_max) throw Error(ErrorKind::InvalidParameter, "level index outside the table");
  double product = 1.0;
  for (int j = 0; j < n; ++j) product *= levels[n] - levels[j];
  return std::sqrt(product);
}

EigenstateBuild build_eigenstate_detailed(const PotentialFamily& family, int n, const Grid& grid,
                                          StencilOrder order) {
  if (n < 0) throw Error(ErrorKind::InvalidParameter, "level index must be non-negative");
  const int bound = family.max_bound_level();
  if (bound >= 0 && n > bound) {
    std::ostringstream os;
    os << "level " << n << " is not bound (last bound level " << bound << ")";
    throw Error(ErrorKind::LevelNotBound, os.str());
  }

  const ParameterChain chain = parameter_chain(family, n + 1);
  WaveFunctionGrid psi = ground_state(family, chain.values.back(), grid, order);
  for (int k = n; k >= 1; --k) {
    const GridSamples w = eval_W(family, chain.values[static_cast<std::size_t>(k) - 1], grid);
    psi = apply_ladder(w, psi, LadderMode::Raising, order);
  }

  EigenstateBuild out{psi, psi.norm(), 0.0};
  out.expected_norm = normalization_factor(energy_levels(family, n), n);
  if (std::abs(out.raw_norm - out.expected_norm) > kUnderResolvedTolerance * out.expected_norm) {
    std::ostringstream os;
    os << "level " << n << ": ladder norm " << out.raw_norm << " differs from the expected "
       << out.expected_norm << "; refine or widen the grid";
    throw Error(ErrorKind::UnderResolved, os.str());
  }
  out.psi = psi.normalized();
  return out;
}

WaveFunctionGrid build_eigenstate(const PotentialFamily& family, int n, const Grid& grid, StencilOrder order) {
  return build_eigenstate_detailed(family, n, grid, order).psi;
}

FdSpectrum fd_diagonalize(const PotentialFamily& family, const Grid& grid, int k, StencilOrder order) {
  if (k < 1) throw Error(ErrorKind::InvalidParameter, "number of eigenpairs must be at least 1");
  const GridSamples w = eval_W(family, family.a1(), grid);
  const BandedSymmetricMatrix h = build_hamiltonian_matrix(w, order);
  const BandedEigenpairs pairs = lowest_eigenpairs(h, static_cast<std::size_t>(k));

  FdSpectrum out;
  out.ground_offset = pairs.values[0];
  const std::size_t n = grid.n_points();
  const std::size_t edge = std::max<std::size_t>(1, n / 50);
  const double scale = 1.0 / std::sqrt(grid.spacing());
  for (int j = 0; j < k; ++j) {
    out.energies.push_back(pairs.values[j] - pairs.values[0]);
    WaveFunctionGrid psi(grid);
    for (std::size_t i = 0; i < n; ++i) psi[i] = scale * pairs.vectors(static_cast<Eigen::Index>(i), j);
    double tail = 0.0;
    for (std::size_t i = 0; i < edge; ++i) {
      tail += std::norm(psi[i]) + std::norm(psi[n - 1 - i]);
    }
    tail *= grid.spacing();
    out.edge_weights.push_back(tail);
    if (tail > kEdgeWeightWarning) {
      std::ostringstream os;
      os << "FD eigenstate " << j << " carries weight " << tail << " near the grid boundary";
      diagnostics::warn(os.str());
    }
    out.states.push_back(psi.normalized());
  }
  return out;
}

double eigen_residual(const PotentialFamily& family, const WaveFunctionGrid& psi, double energy,
                      StencilOrder order) {
  const GridSamples w = eval_W(family, family.a1(), psi.grid());
  const auto hpsi = apply_ladder(w, apply_ladder(w, psi, LadderMode::Lowering, order), LadderMode::Raising, order);
  return (hpsi - complex(energy) * psi).interior_norm(0.9);
}

}  // namespace siqm
