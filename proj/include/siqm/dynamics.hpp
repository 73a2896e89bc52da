#pragma once

// Forced ladder Hamiltonian on the truncated eigenbasis
//
//   h(t) = H + f(t) [exp(+s i R1 t) B+ + exp(-s i R1 t) B-],
//
// s = +1 for PhaseSign::Paper, s = -1 for PhaseSign::Conjugate. The closed form it
// is compared against is exp(-i H t) exp(-i F(t) (B+ + B-)), F = int_0^t f.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "siqm/grid.hpp"
#include "siqm/spectra.hpp"

namespace siqm {

enum class PhaseSign { Paper, Conjugate };

std::string to_string(PhaseSign sign);
PhaseSign phase_sign_from_string(const std::string& name);

struct Drive {
  enum class Kind { Constant, Pulse };
  Kind kind = Kind::Constant;
  double f0 = 0.0;
  double t0 = 0.0;
  double sigma = 1.0;

  // "const:<f0>" or "pulse:<f0>,<t0>,<sigma>"
  static Drive parse(const std::string& text);
  std::string describe() const;

  double value(double t) const;
  double integral(double t) const;  // F(t) = int_0^t f
};

struct EvolveOptions {
  int dimension = 30;
  double t_max = 5.0;
  double dt = 0.01;
  PhaseSign sign = PhaseSign::Conjugate;
  double record_interval = 0.05;
  double convergence_tolerance = 1e-8;
  double norm_tolerance = 1e-8;
  double truncation_budget = 1e-6;
  double stability_budget = 0.1;  // dt * max E_n
  int max_halvings = 12;
};

struct ForcedEvolution {
  Drive drive;
  PhaseSign sign = PhaseSign::Conjugate;
  double r1 = 0.0;
  double dt = 0.0;  // accepted step
  int halvings = 0;
  double convergence_change = 0.0;  // ||psi_dt - psi_{dt/2}|| at the accepted step

  std::vector<double> times;
  std::vector<Eigen::VectorXcd> direct;
  std::vector<Eigen::VectorXcd> closed;
  std::vector<double> overlaps;  // |<direct|closed>|^2 per recorded time

  double max_norm_drift = 0.0;
  double max_top_population = 0.0;
  double final_overlap = 0.0;

  // Interaction-picture final state exp(iHt) psi(t) against coherent states.
  complex best_fit_z{0.0, 0.0};
  double coherent_overlap = 0.0;  // normalized truncated h_n state
  double ladder_overlap = 0.0;    // normalized z^n / sqrt(E_1..E_n) state
};

// levels.n_max must be at least options.dimension - 1. Throws
// truncation-overflow and step-instability.
ForcedEvolution evolve_forced(const SpectrumTable& levels, const Drive& drive, const EvolveOptions& options);

// |<a|b>|^2 / (|a|^2 |b|^2)
double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

}  // namespace siqm
