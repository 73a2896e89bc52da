#include "siqm/dynamics.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "siqm/coherent.hpp"
#include "siqm/error.hpp"

namespace siqm {

std::string to_string(PhaseSign sign) { return sign == PhaseSign::Paper ? "paper" : "conjugate"; }

PhaseSign phase_sign_from_string(const std::string& name) {
  if (name == "paper") return PhaseSign::Paper;
  if (name == "conjugate") return PhaseSign::Conjugate;
  throw Error(ErrorKind::InvalidParameter, "phase sign must be 'paper' or 'conjugate', got '" + name + "'");
}

namespace {

double parse_number(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::InvalidParameter, "cannot read " + what + " from '" + text + "'");
  }
  return v;
}

}  // namespace

Drive Drive::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidParameter, "drive must look like const:<f0> or pulse:<f0>,<t0>,<sigma>");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  Drive d;
  if (kind == "const") {
    d.kind = Kind::Constant;
    d.f0 = parse_number(rest, "drive amplitude");
    return d;
  }
  if (kind == "pulse") {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      parts.push_back(rest.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() != 3) throw Error(ErrorKind::InvalidParameter, "pulse drive needs <f0>,<t0>,<sigma>");
    d.kind = Kind::Pulse;
    d.f0 = parse_number(parts[0], "pulse amplitude");
    d.t0 = parse_number(parts[1], "pulse centre");
    d.sigma = parse_number(parts[2], "pulse width");
    if (!(d.sigma > 0.0)) throw Error(ErrorKind::InvalidParameter, "pulse width must be positive");
    return d;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown drive kind '" + kind + "'");
}

std::string Drive::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind == Kind::Constant) {
    os << "const:" << f0;
  } else {
    os << "pulse:" << f0 << "," << t0 << "," << sigma;
  }
  return os.str();
}

double Drive::value(double t) const {
  if (kind == Kind::Constant) return f0;
  const double u = (t - t0) / sigma;
  return f0 * std::exp(-0.5 * u * u);
}

double Drive::integral(double t) const {
  if (kind == Kind::Constant) return f0 * t;
  const double s2 = sigma * std::sqrt(2.0);
  return f0 * sigma * std::sqrt(M_PI / 2.0) * (std::erf((t - t0) / s2) + std::erf(t0 / s2));
}

double fidelity(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const double na = a.squaredNorm();
  const double nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::norm(a.dot(b)) / (na * nb);
}

namespace {

struct Run {
  Eigen::VectorXcd final_state;
  std::vector<double> times;
  std::vector<Eigen::VectorXcd> states;
  double max_drift = 0.0;
  double max_top = 0.0;
};

class ForcedSystem {
 public:
  ForcedSystem(const SpectrumTable& levels, int n, const Drive& drive, PhaseSign sign)
      : energy_(n), coupling_(n > 0 ? n - 1 : 0), drive_(drive),
        sign_(sign == PhaseSign::Paper ? 1.0 : -1.0), r1_(levels[1]) {
    for (int i = 0; i < n; ++i) energy_(i) = levels[i];
    for (int i = 0; i + 1 < n; ++i) coupling_(i) = std::sqrt(levels[i + 1]);
  }

  // -i h(t) psi with the tridiagonal ladder action.
  Eigen::VectorXcd rhs(double t, const Eigen::VectorXcd& psi) const {
    const Eigen::Index n = psi.size();
    const double f = drive_.value(t);
    const complex up = f * std::exp(complex(0.0, sign_ * r1_ * t));    // on B+
    const complex down = f * std::exp(complex(0.0, -sign_ * r1_ * t)); // on B-
    Eigen::VectorXcd out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      complex acc = energy_(i) * psi(i);
      if (i > 0) acc += up * coupling_(i - 1) * psi(i - 1);
      if (i + 1 < n) acc += down * coupling_(i) * psi(i + 1);
      out(i) = complex(0.0, -1.0) * acc;
    }
    return out;
  }

  Run integrate(double t_max, double dt, double record_interval) const {
    const auto steps = static_cast<long long>(std::ceil(t_max / dt - 1e-9));
    const double h = steps > 0 ? t_max / static_cast<double>(steps) : 0.0;
    const long long stride = std::max<long long>(1, std::llround(record_interval / std::max(h, 1e-300)));
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(energy_.size());
    psi(0) = 1.0;

    Run run;
    run.times.push_back(0.0);
    run.states.push_back(psi);
    for (long long s = 0; s < steps; ++s) {
      const double t = h * static_cast<double>(s);
      const Eigen::VectorXcd k1 = rhs(t, psi);
      const Eigen::VectorXcd k2 = rhs(t + 0.5 * h, psi + 0.5 * h * k1);
      const Eigen::VectorXcd k3 = rhs(t + 0.5 * h, psi + 0.5 * h * k2);
      const Eigen::VectorXcd k4 = rhs(t + h, psi + h * k3);
      psi += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      run.max_drift = std::max(run.max_drift, std::abs(psi.norm() - 1.0));
      run.max_top = std::max(run.max_top, std::norm(psi(psi.size() - 1)));
      if ((s + 1) % stride == 0 || s + 1 == steps) {
        run.times.push_back(h * static_cast<double>(s + 1));
        run.states.push_back(psi);
      }
    }
    run.final_state = psi;
    return run;
  }

  double max_energy() const { return energy_.size() > 0 ? energy_.maxCoeff() : 0.0; }

 private:
  Eigen::VectorXd energy_;
  Eigen::VectorXd coupling_;
  Drive drive_;
  double sign_;
  double r1_;
};

}  // namespace

ForcedEvolution evolve_forced(const SpectrumTable& levels, const Drive& drive, const EvolveOptions& options) {
  const int n = options.dimension;
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "evolution needs at least 2 levels");
  if (levels.n_max < n - 1) throw Error(ErrorKind::InvalidParameter, "spectrum table shorter than the truncation");
  if (!(options.t_max > 0.0) || !(options.dt > 0.0)) {
    throw Error(ErrorKind::InvalidParameter, "t_max and dt must be positive");
  }

  const ForcedSystem system(levels, n, drive, options.sign);
  double dt = options.dt;
  if (system.max_energy() > 0.0) dt = std::min(dt, options.stability_budget / system.max_energy());

  Run previous = system.integrate(options.t_max, dt, options.record_interval);
  Run accepted;
  bool converged = false;
  int halvings = 0;
  double change = 0.0;
  for (halvings = 1; halvings <= options.max_halvings; ++halvings) {
    dt *= 0.5;
    Run current = system.integrate(options.t_max, dt, options.record_interval);
    change = (current.final_state - previous.final_state).norm();
    if (change < options.convergence_tolerance && current.max_drift <= options.norm_tolerance) {
      accepted = std::move(current);
      converged = true;
      break;
    }
    previous = std::move(current);
  }
  if (!converged) {
    std::ostringstream os;
    os << "integrator did not converge after " << options.max_halvings << " halvings (last change " << change
       << ", norm drift " << previous.max_drift << ")";
    throw Error(ErrorKind::StepInstability, os.str());
  }
  if (accepted.max_top > options.truncation_budget) {
    std::ostringstream os;
    os << "top level population " << accepted.max_top << " exceeds " << options.truncation_budget
       << "; raise the truncation";
    throw Error(ErrorKind::TruncationOverflow, os.str());
  }

  ForcedEvolution out;
  out.drive = drive;
  out.sign = options.sign;
  out.r1 = levels[1];
  out.dt = dt;
  out.halvings = halvings;
  out.convergence_change = change;
  out.max_norm_drift = accepted.max_drift;
  out.max_top_population = accepted.max_top;
  out.times = accepted.times;
  out.direct = accepted.states;

  // exp(-i F X) through the eigenbasis of X = B+ + B-.
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    x(i + 1, i) = std::sqrt(levels[i + 1]);
    x(i, i + 1) = x(i + 1, i);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x);
  const Eigen::MatrixXcd v = eig.eigenvectors().cast<complex>();
  const Eigen::VectorXd lambda = eig.eigenvalues();
  const Eigen::VectorXcd v0 = v.row(0).adjoint();  // V^T e0

  for (std::size_t i = 0; i < out.times.size(); ++i) {
    const double t = out.times[i];
    const double f = drive.integral(t);
    Eigen::VectorXcd c(n);
    for (int k = 0; k < n; ++k) c(k) = std::exp(complex(0.0, -f * lambda(k))) * v0(k);
    Eigen::VectorXcd psi = v * c;
    for (int k = 0; k < n; ++k) psi(k) *= std::exp(complex(0.0, -levels[k] * t));
    out.closed.push_back(psi);
    out.overlaps.push_back(fidelity(out.direct[i], psi));
  }
  out.final_overlap = out.overlaps.back();

  const double t_end = out.times.back();
  Eigen::VectorXcd interaction = out.direct.back();
  for (int k = 0; k < n; ++k) interaction(k) *= std::exp(complex(0.0, levels[k] * t_end));
  complex lowered = 0.0;
  for (int k = 0; k + 1 < n; ++k) lowered += std::conj(interaction(k)) * std::sqrt(levels[k + 1]) * interaction(k + 1);
  out.best_fit_z = lowered / interaction.squaredNorm();

  const CoherentState coherent = coherent_recursive(levels, out.best_fit_z, n);
  out.coherent_overlap = fidelity(coherent.vector(), interaction);
  const auto eig_vec = ladder_eigenvector(levels, out.best_fit_z, n);
  Eigen::VectorXcd lv(n);
  for (int k = 0; k < n; ++k) lv(k) = eig_vec[static_cast<std::size_t>(k)];
  out.ladder_overlap = fidelity(lv, interaction);
  return out;
}

}  // namespace siqm
