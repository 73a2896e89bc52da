#include "siqm/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "siqm/error.hpp"

namespace siqm {

std::string to_string(FamilyName name) {
  switch (name) {
    case FamilyName::Harmonic: return "harmonic";
    case FamilyName::Morse: return "morse";
    case FamilyName::SelfSimilar: return "selfsimilar";
  }
  return "unknown";
}

FamilyName family_name_from_string(const std::string& name) {
  if (name == "harmonic") return FamilyName::Harmonic;
  if (name == "morse") return FamilyName::Morse;
  if (name == "selfsimilar") return FamilyName::SelfSimilar;
  throw Error(ErrorKind::InvalidParameter, "unknown family '" + name + "'");
}

ParameterRule ParameterRule::scaling(double q) {
  if (!(q > 0.0 && q <= 1.0)) throw Error(ErrorKind::InvalidParameter, "scaling rule requires 0 < q <= 1");
  return {RuleKind::Scaling, q, 0.0};
}

ParameterRule ParameterRule::translation(double delta) {
  if (!std::isfinite(delta)) throw Error(ErrorKind::InvalidParameter, "translation shift must be finite");
  return {RuleKind::Translation, 1.0, delta};
}

double ParameterRule::apply(double a) const {
  return kind == RuleKind::Scaling ? factor_q * a : a + shift_delta;
}

PotentialFamily PotentialFamily::harmonic(double lambda) {
  if (!std::isfinite(lambda) || lambda == 0.0) {
    throw Error(ErrorKind::InvalidParameter, "harmonic frequency must be finite and nonzero");
  }
  PotentialFamily f;
  f.name_ = FamilyName::Harmonic;
  f.a1_ = lambda;
  f.rule_ = ParameterRule::translation(0.0);
  return f;
}

PotentialFamily PotentialFamily::morse(double depth_a) {
  if (!(depth_a > 0.0) || !std::isfinite(depth_a)) {
    throw Error(ErrorKind::InvalidParameter, "Morse parameter A must be positive");
  }
  PotentialFamily f;
  f.name_ = FamilyName::Morse;
  f.a1_ = depth_a;
  f.rule_ = ParameterRule::translation(-1.0);
  return f;
}

PotentialFamily PotentialFamily::selfsimilar(double q, double c, double a1, FamilyOptions options) {
  if (!(a1 > 0.0) || !std::isfinite(a1)) {
    throw Error(ErrorKind::InvalidParameter, "self-similar family requires a1 > 0");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorKind::InvalidParameter, "self-similar family requires c > 0");
  }
  PotentialFamily f;
  f.name_ = FamilyName::SelfSimilar;
  f.a1_ = a1;
  f.rule_ = ParameterRule::scaling(q);
  f.c_ = c;
  // c0 = c a1 / (1 + q) makes the series remainder (1 + q) c0 equal R(a1) = c a1.
  auto coeffs = series_coefficients(q, c * a1 / (1.0 + q), options.series_order);
  f.solution_ = std::make_shared<const SelfSimilarSolution>(std::move(coeffs), options.continuation);
  return f;
}

PotentialFamily PotentialFamily::from_descriptor(const FamilyDescriptor& d, FamilyOptions options) {
  switch (d.name) {
    case FamilyName::Harmonic: return harmonic(d.a1);
    case FamilyName::Morse: return morse(d.a1);
    case FamilyName::SelfSimilar: return selfsimilar(d.q, d.c, d.a1, options);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

FamilyDescriptor PotentialFamily::descriptor() const {
  FamilyDescriptor d;
  d.name = name_;
  d.a1 = a1_;
  d.q = q();
  d.c = c_;
  return d;
}

double PotentialFamily::parameter(int m) const {
  // Same operation order as parameter_chain so both agree bit for bit.
  double a = a1_;
  for (int k = 1; k < m; ++k) a = rule_.apply(a);
  for (int k = m; k < 1; ++k) {
    a = rule_.kind == RuleKind::Scaling ? a / rule_.factor_q : a - rule_.shift_delta;
  }
  return a;
}

bool PotentialFamily::parameter_valid(double a) const {
  switch (name_) {
    case FamilyName::Harmonic: return std::isfinite(a) && a != 0.0;
    case FamilyName::Morse: return std::isfinite(a);
    case FamilyName::SelfSimilar: return std::isfinite(a) && a > 0.0;
  }
  return false;
}

double PotentialFamily::W(double x, double a) const {
  if (!parameter_valid(a)) {
    std::ostringstream os;
    os << "parameter " << a << " outside the domain of family " << to_string(name_);
    throw Error(ErrorKind::OutOfDomain, os.str());
  }
  double w = 0.0;
  switch (name_) {
    case FamilyName::Harmonic: w = a * x; break;
    case FamilyName::Morse: w = a - std::exp(-x); break;
    case FamilyName::SelfSimilar: {
      const double s = std::sqrt(a / a1_);
      w = s * solution_->W(s * x);
      break;
    }
  }
  if (perturbation_ != 0.0) w += perturbation_ * x * std::exp(-x * x / 8.0);
  return w;
}

double PotentialFamily::remainder(double a) const {
  switch (name_) {
    case FamilyName::Harmonic: return 2.0 * a;
    case FamilyName::Morse: {
      const double next = a + rule_.shift_delta;
      return a * a - next * next;
    }
    case FamilyName::SelfSimilar: return c_ * a;
  }
  return 0.0;
}

int PotentialFamily::max_bound_level() const {
  if (name_ != FamilyName::Morse) return -1;
  // Level n is bound while a_{n+1} = A - n stays positive.
  return static_cast<int>(std::ceil(a1_)) - 1;
}

PotentialFamily PotentialFamily::with_perturbation(double eps) const {
  PotentialFamily f = *this;
  f.perturbation_ = eps;
  return f;
}

ParameterChain parameter_chain(const PotentialFamily& family, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameter, "chain length must be at least 1");
  ParameterChain chain;
  chain.values.reserve(static_cast<std::size_t>(n));
  double a = family.a1();
  for (int k = 0; k < n; ++k) {
    chain.values.push_back(a);
    a = family.rule().apply(a);
  }
  return chain;
}

GridSamples eval_W(const PotentialFamily& family, double a, const Grid& grid) {
  return sample_real(grid, [&](double x) { return family.W(x, a); });
}

double remainder(const PotentialFamily& family, double a) { return family.remainder(a); }

WaveFunctionGrid ground_state(const PotentialFamily& family, double a, const Grid& grid,
                              StencilOrder order) {
  const GridSamples w = eval_W(family, a, grid);
  const std::size_t n = grid.n_points();
  const double h = grid.spacing();
  const auto dw = differentiate(std::span<const double>(w.values), h, order);

  // Cumulative trapezoid with the Euler-Maclaurin end correction, outward from
  // the node nearest x = 0.
  const double u0 = std::round(-grid.x_min() / h);
  const auto origin = static_cast<std::size_t>(std::clamp(u0, 0.0, static_cast<double>(n - 1)));
  auto panel = [&](std::size_t i) {
    return 0.5 * h * (w.values[i] + w.values[i + 1]) - h * h / 12.0 * (dw[i + 1] - dw[i]);
  };
  std::vector<double> log_psi(n, 0.0);
  for (std::size_t i = origin; i + 1 < n; ++i) log_psi[i + 1] = log_psi[i] - panel(i);
  for (std::size_t i = origin; i > 0; --i) log_psi[i - 1] = log_psi[i] + panel(i - 1);

  const double peak = *std::max_element(log_psi.begin(), log_psi.end());
  WaveFunctionGrid psi(grid);
  for (std::size_t i = 0; i < n; ++i) psi[i] = std::exp(log_psi[i] - peak);

  const double edge = std::max(std::abs(psi[0]), std::abs(psi[n - 1]));
  if (!(edge <= kBoundaryDecayThreshold)) {
    std::ostringstream os;
    os << "ground state of " << to_string(family.name()) << " at a = " << a
       << " does not decay at the grid boundary (edge/peak = " << edge << ")";
    throw Error(ErrorKind::NonNormalizable, os.str());
  }
  return psi.normalized();
}

double shape_invariance_residual(const PotentialFamily& family, const Grid& grid,
                                 const std::vector<WaveFunctionGrid>& test_fns, StencilOrder order) {
  const double a1 = family.a1();
  const double a2 = family.rule().apply(a1);
  const GridSamples w1 = eval_W(family, a1, grid);
  const GridSamples w2 = eval_W(family, a2, grid);
  const double r = family.remainder(a1);

  double worst = 0.0;
  for (const auto& f : test_fns) {
    const auto upper = apply_ladder(w1, apply_ladder(w1, f, LadderMode::Raising, order), LadderMode::Lowering, order);
    const auto lower = apply_ladder(w2, apply_ladder(w2, f, LadderMode::Lowering, order), LadderMode::Raising, order);
    const auto diff = upper - lower - complex(r) * f;
    worst = std::max(worst, diff.interior_norm(0.9) / f.interior_norm(0.9));
  }
  return worst;
}

}  // namespace siqm
