#pragma once

// Superpotential families with their parameter maps and remainders.
//
//   harmonic    W(x; l) = l x,            a2 = a1,        R = 2 l
//   morse       W(x; A) = A - exp(-x),    a2 = a1 - 1,    R(a) = a^2 - (a - 1)^2
//   selfsimilar W(x; a) = s W1(s x),      a2 = q a1,      R(a) = c a,   s = sqrt(a / a1)
//
// W1 is the self-similar solution with c0 = c a1 / (1 + q).

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "siqm/grid.hpp"
#include "siqm/selfsimilar.hpp"

namespace siqm {

enum class FamilyName { Harmonic, Morse, SelfSimilar };

std::string to_string(FamilyName name);
FamilyName family_name_from_string(const std::string& name);

enum class RuleKind { Scaling, Translation };

struct ParameterRule {
  RuleKind kind = RuleKind::Translation;
  double factor_q = 1.0;     // scaling only
  double shift_delta = 0.0;  // translation only

  static ParameterRule scaling(double q);
  static ParameterRule translation(double delta);

  double apply(double a) const;
};

struct ParameterChain {
  std::vector<double> values;  // a_1 ... a_n
};

// Plain-data description used by configuration files and manifests.
struct FamilyDescriptor {
  FamilyName name = FamilyName::SelfSimilar;
  double a1 = 1.0;
  double q = 0.5;  // selfsimilar only
  double c = 1.0;  // selfsimilar only

  bool operator==(const FamilyDescriptor&) const = default;
};

struct FamilyOptions {
  int series_order = 120;
  ContinuationOptions continuation{200.0, 0.01, 0.8};
};

class PotentialFamily {
 public:
  static PotentialFamily harmonic(double lambda);
  static PotentialFamily morse(double depth_a);
  static PotentialFamily selfsimilar(double q, double c, double a1, FamilyOptions options = {});
  static PotentialFamily from_descriptor(const FamilyDescriptor& d, FamilyOptions options = {});

  FamilyName name() const { return name_; }
  double a1() const { return a1_; }
  const ParameterRule& rule() const { return rule_; }
  double c() const { return c_; }
  // q of the scaling rule, 1 for translation families.
  double q() const { return rule_.kind == RuleKind::Scaling ? rule_.factor_q : 1.0; }
  FamilyDescriptor descriptor() const;

  // a_m for integer m (m = 1 is a1); m may be <= 0.
  double parameter(int m) const;
  bool parameter_valid(double a) const;

  double W(double x, double a) const;
  double remainder(double a) const;

  // Highest n with a bound n-th level, or -1 when unlimited.
  int max_bound_level() const;

  const SelfSimilarSolution* solution() const { return solution_.get(); }

  // Adds eps * x * exp(-x^2 / 8) to every W evaluation. Used to exercise the
  // failure path of the verification suites.
  PotentialFamily with_perturbation(double eps) const;
  double perturbation() const { return perturbation_; }

 private:
  PotentialFamily() = default;

  FamilyName name_ = FamilyName::Harmonic;
  double a1_ = 1.0;
  ParameterRule rule_{};
  double c_ = 0.0;
  double perturbation_ = 0.0;
  std::shared_ptr<const SelfSimilarSolution> solution_;
};

ParameterChain parameter_chain(const PotentialFamily& family, int n);

GridSamples eval_W(const PotentialFamily& family, double a, const Grid& grid);

double remainder(const PotentialFamily& family, double a);

// psi0 ~ exp(-int_0^x W), unit norm. Throws non-normalizable when the result
// does not decay at both ends of the grid.
WaveFunctionGrid ground_state(const PotentialFamily& family, double a, const Grid& grid,
                              StencilOrder order = StencilOrder::Fourth);

// Relative tail amplitude above which ground_state reports non-normalizable.
inline constexpr double kBoundaryDecayThreshold = 1e-5;

// max_f || [A(a1) A^dag(a1) - A^dag(a2) A(a2) - R(a1)] f || / ||f|| over the
// central 90% of the grid.
double shape_invariance_residual(const PotentialFamily& family, const Grid& grid,
                                 const std::vector<WaveFunctionGrid>& test_fns,
                                 StencilOrder order = StencilOrder::Fourth);

inline constexpr double kShapeInvarianceGate = 1e-6;

}  // namespace siqm
