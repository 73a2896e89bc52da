#include "siqm/dilation.hpp"

#include <algorithm>
#include <cmath>

#include "siqm/error.hpp"

namespace siqm {

std::string to_string(DilationIdentity which) {
  return which == DilationIdentity::Direct ? "yy3" : "yy6";
}

WaveFunctionGrid dilation_lhs(const PotentialFamily& family, const WaveFunctionGrid& f, DilationIdentity which,
                              const DilationOptions& options) {
  const Grid& grid = f.grid();
  const double q = family.q();
  const double a1 = family.a1();
  const GridSamples w = eval_W(family, a1, grid);
  const auto aad = apply_ladder(w, apply_ladder(w, f, LadderMode::Raising, options.order), LadderMode::Lowering,
                                options.order);

  if (which == DilationIdentity::Direct) {
    // sqrt(q) A(sqrt(q) x) = sqrt(q) W(sqrt(q) x) + d/dx, so q A^dag A at the
    // contracted argument is a plain ladder product with a rescaled W.
    const double sq = std::sqrt(q);
    const GridSamples wd = sample_real(grid, [&](double x) { return sq * family.W(sq * x, a1); });
    const auto contracted = apply_ladder(wd, apply_ladder(wd, f, LadderMode::Lowering, options.order),
                                         LadderMode::Raising, options.order);
    return aad - contracted;
  }

  const double sq = std::sqrt(q);
  auto c = [&](const WaveFunctionGrid& g) {
    return apply_ladder(w, dilate(g, 1.0 / sq, options.interp_points), LadderMode::Lowering, options.order);
  };
  auto c_dag = [&](const WaveFunctionGrid& g) {
    return dilate(apply_ladder(w, g, LadderMode::Raising, options.order), sq, options.interp_points);
  };
  return c(c_dag(f)) - complex(q) * c_dag(c(f));
}

double dilation_identity_residual(const PotentialFamily& family, const Grid& grid, DilationIdentity which,
                                  const std::vector<WaveFunctionGrid>& test_fns, const DilationOptions& options) {
  const double r = family.remainder(family.a1());
  double worst = 0.0;
  for (const auto& f : test_fns) {
    if (!(f.grid() == grid)) throw Error(ErrorKind::GridMismatch, "test function lives on another grid");
    const auto diff = dilation_lhs(family, f, which, options) - complex(r) * f;
    worst = std::max(worst, diff.interior_norm(options.interior_fraction) / f.interior_norm(options.interior_fraction));
  }
  return worst;
}

std::vector<WaveFunctionGrid> dilation_test_functions(const Grid& grid) {
  const double width = std::min(1.0, (grid.x_max() - grid.x_min()) / 20.0);
  std::vector<WaveFunctionGrid> out;
  out.push_back(sample(grid, [&](double x) { return std::exp(-0.5 * x * x / (width * width)); }));
  out.push_back(sample(grid, [&](double x) {
    const double u = (x - 0.4 * width) / (1.3 * width);
    return std::exp(-0.5 * u * u) * std::exp(complex(0.0, 0.8 * x / width));
  }));
  out.push_back(sample(grid, [&](double x) {
    const double u = x / width;
    return u * std::exp(-0.5 * u * u / 0.8);
  }));
  return out;
}

}  // namespace siqm
