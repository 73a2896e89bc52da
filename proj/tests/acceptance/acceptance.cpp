// One line per acceptance criterion. Exit status is nonzero when any line
// reports FAIL.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "siqm/cli/commands.hpp"
#include "siqm/coherent.hpp"
#include "siqm/dilation.hpp"
#include "siqm/dynamics.hpp"
#include "siqm/error.hpp"
#include "siqm/ladder.hpp"
#include "siqm/lattice.hpp"
#include "siqm/selfsimilar.hpp"
#include "siqm/spectra.hpp"
#include "../oracles.hpp"

using namespace siqm;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void note(const std::string& id, const std::string& detail) {
  std::printf("[INFO] %s: %s\n", id.c_str(), detail.c_str());
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double spectrum_error(const Grid& grid, int n_max, std::vector<double>* per_level = nullptr) {
  const auto family = PotentialFamily::selfsimilar(0.5, 1.0, 1.0);
  const auto ladder = energy_levels(family, n_max);
  const auto fd = fd_diagonalize(family, grid, n_max + 1);
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double e = std::abs(ladder[n] - fd.energies[static_cast<std::size_t>(n)]);
    if (per_level) per_level->push_back(e);
    worst = std::max(worst, e);
  }
  return worst;
}

void criterion_1() {
  const auto ladder = energy_levels(PotentialFamily::selfsimilar(0.5, 1.0, 1.0), 6);
  std::vector<double> errs;
  const double worst = spectrum_error(build_grid(-15.0, 15.0, 3001), 6, &errs);
  std::string detail = "q=0.5 grid [-15,15] h=0.01, E3 = " + fmt(ladder[3]) + ", |dE_n| n=0..6:";
  for (double e : errs) detail += " " + fmt(e);
  report("1 scaling spectrum", worst <= 1e-3 && ladder[3] == 1.75, detail);

  const double wide = spectrum_error(build_grid(-80.0, 80.0, 16001), 6);
  note("1 scaling spectrum", "same h on [-80,80]: max |dE_n| = " + fmt(wide) +
                                 " (the [-15,15] box confines the slowly decaying upper states)");
}

void criterion_2() {
  const auto s = series_coefficients(0.0, 1.0, 8);
  double worst = 0.0;
  for (std::size_t k = 0; k < oracle::kTanhTaylor.size(); ++k)
    worst = std::max(worst, std::abs(s.coeffs[k] - oracle::kTanhTaylor[k]));
  report("2 soliton limit", worst <= 1e-12, "max |c_k - tanh_k| k=0..8 = " + fmt(worst));
}

void criterion_3() {
  const auto family = PotentialFamily::selfsimilar(1.0, 1.0, 1.0);
  const Grid grid = build_grid(-15.0, 15.0, 3001);
  const double c0 = family.solution()->coefficients().c0;
  double w_err = 0.0;
  for (double x : grid.points()) w_err = std::max(w_err, std::abs(family.W(x, 1.0) - c0 * x));
  const auto fd = fd_diagonalize(family, grid, 6);
  double worst = 0.0;
  for (std::size_t n = 1; n < fd.energies.size(); ++n)
    worst = std::max(worst, std::abs(fd.energies[n] - fd.energies[n - 1] - 2.0 * c0));
  report("3 harmonic limit", worst <= 1e-4 && w_err == 0.0,
         "max |W - c0 x| = " + fmt(w_err) + ", max |spacing - 2 c0| = " + fmt(worst));
}

void criterion_4() {
  const auto family = PotentialFamily::morse(2.5);
  const auto fd = fd_diagonalize(family, build_grid(-6.0, 40.0, 4601), 3);
  const auto ladder = energy_levels(family, 2);
  const double e1 = std::abs(fd.energies[1] - 4.0);
  const double e2 = std::abs(fd.energies[2] - 6.0);
  const bool sums = ladder[1] == 4.0 && ladder[2] == 6.0;
  report("4 Morse fixture", e1 <= 1e-3 && e2 <= 1e-3 && sums,
         "|E1-E0-4| = " + fmt(e1) + ", |E2-E0-6| = " + fmt(e2));
}

void criterion_5() {
  const auto family = PotentialFamily::selfsimilar(0.5, 1.0, 1.0);
  const Grid grid = build_grid(-15.0, 15.0, 3001);
  const Lattice lattice(family, grid, 8);
  const std::vector<RelationId> ids = {
      RelationId::BracketRemainder, RelationId::BracketShift,  RelationId::BracketSecond,
      RelationId::BracketDepth3,    RelationId::ScaledBracket, RelationId::ScaledRemainder,
      RelationId::QOscillator,      RelationId::J3RaisesB,     RelationId::J3LowersB,
      RelationId::DeformedSo21,
  };
  double worst = 0.0;
  std::string detail = "K=8:";
  for (auto id : ids) {
    const double r = commutator_residual(id, lattice);
    worst = std::max(worst, r);
    detail += " " + to_string(id) + "=" + fmt(r);
  }
  const auto fns = dilation_test_functions(grid);
  const double yy3 = dilation_identity_residual(family, grid, DilationIdentity::Direct, fns);
  const double yy6 = dilation_identity_residual(family, grid, DilationIdentity::Conjugated, fns);
  detail += "; dilation yy3=" + fmt(yy3) + " yy6=" + fmt(yy6);
  report("5 algebra suite", worst <= 1e-6 && yy3 <= 1e-5 && yy6 <= 1e-5, detail);
}

void criterion_6() {
  const auto r = matrix_identities(scaling_spectrum(0.5, 1.0, 20), 20);
  std::string detail = "N=20:";
  for (const auto& c : r.checks) detail += " " + c.id + "=" + fmt(c.residual);
  report("6 matrix identities", r.all_pass(), detail);
}

void criterion_7() {
  const int N = 21;  // n = 0..20
  const complex z(0.3, 0.0);
  const auto closed = coherent_closed_scaling(0.5, 1.0, z, N);
  const auto rec = coherent_recursive(scaling_spectrum(0.5, 1.0, N - 1), z, N);
  double rel = 0.0;
  for (std::size_t n = 0; n < static_cast<std::size_t>(N); ++n)
    rel = std::max(rel, std::abs(closed.coefficients[n] - rec.coefficients[n]) / std::abs(rec.coefficients[n]));

  const auto levels = scaling_spectrum(0.5, 1.0, 20);
  const auto r = coherent_property_residuals(coherent_recursive(levels, z, 20), build_ladder_matrices(levels, 20));
  report("7 coherent states", rel <= 1e-12 && r.eigen_residual <= 1e-10 && r.derivative_residual <= 1e-6,
         "closed vs recursive " + fmt(rel) + ", eigen " + fmt(r.eigen_residual) + ", derivative " +
             fmt(r.derivative_residual));
  note("7 coherent states", "residual against the c-number matrix without the spectrum shift: " +
                                fmt(r.literal_eigen_residual));
}

void criterion_8() {
  EvolveOptions o;
  o.sign = PhaseSign::Conjugate;
  const Drive drive = Drive::parse("const:0.1");
  const auto q1 = evolve_forced(scaling_spectrum(1.0, 1.0, o.dimension), drive, o);
  const auto qh = evolve_forced(scaling_spectrum(0.5, 1.0, o.dimension), drive, o);
  const double drift = std::max(q1.max_norm_drift, qh.max_norm_drift);
  report("8 dynamics", q1.final_overlap >= 1.0 - 1e-6 && qh.coherent_overlap < 0.999 && drift <= 1e-8,
         "q=1 direct vs closed overlap " + fmt(q1.final_overlap) + ", q=0.5 best-fit |z> overlap " +
             fmt(qh.coherent_overlap) + " (z = " + fmt(qh.best_fit_z.real()) + fmt(qh.best_fit_z.imag()) +
             "i), max norm drift " + fmt(drift));
  o.sign = PhaseSign::Paper;
  const auto paper = evolve_forced(scaling_spectrum(1.0, 1.0, o.dimension), drive, o);
  note("8 dynamics", "q=1 with the opposite phase sign: overlap " + fmt(paper.final_overlap) +
                         "; q=0.5 overlap with z^n/sqrt(E1..En) " + fmt(qh.ladder_overlap));
}

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::vector<std::string> csv_outputs(const fs::path& manifest) {
  std::vector<std::string> out;
  const auto j = nlohmann::json::parse(slurp(manifest));
  for (const auto& p : j["outputs"]) {
    const std::string s = p.get<std::string>();
    if (s.size() > 4 && s.substr(s.size() - 4) == ".csv") out.push_back(s);
  }
  return out;
}

void criterion_9() {
  const fs::path dir = fs::temp_directory_path() / ("siqm-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::vector<std::string>> commands = {
      {"spectrum", "--family", "selfsimilar", "--q", "0.5", "--levels", "6", "--grid-min", "-15", "--grid-max", "15",
       "--grid-points", "3001"},
      {"coeffs", "--q", "0", "--order", "8", "--grid-min", "-5", "--grid-max", "5", "--grid-points", "101"},
      {"eigenstates", "--levels", "3"},
      {"coherent", "--q", "0.5", "--levels", "20"},
      {"evolve", "--q", "1", "--drive", "const:0.1"},
      {"evolve", "--q", "0.5", "--drive", "const:0.1"},
  };
  bool pass = true;
  int files = 0;
  std::string mismatched;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::vector<std::vector<std::string>> produced(2);
    for (int run = 0; run < 2; ++run) {
      const std::string out = (dir / ("run" + std::to_string(run) + "-" + std::to_string(i) + ".csv")).string();
      auto args = commands[i];
      args.insert(args.end(), {"--out", out});
      std::ostringstream so, se;
      const int code = cli::run_command(args, so, se);
      // exit 2 (tolerance exceeded) still writes its CSV
      if (code != 0 && code != 2) {
        pass = false;
        mismatched += " " + commands[i][0] + "(exit " + std::to_string(code) + ")";
        break;
      }
      produced[static_cast<std::size_t>(run)] = csv_outputs(out + ".manifest.json");
    }
    if (produced[0].size() != produced[1].size() || produced[0].empty()) {
      pass = false;
      continue;
    }
    for (std::size_t k = 0; k < produced[0].size(); ++k) {
      ++files;
      if (slurp(produced[0][k]) != slurp(produced[1][k])) {
        pass = false;
        mismatched += " " + produced[0][k];
      }
    }
  }
  fs::remove_all(dir);
  report("9 reproducibility", pass,
         std::to_string(files) + " CSV files compared byte for byte" + (mismatched.empty() ? "" : ", differ:" + mismatched));
}

template <typename F>
void guarded(const std::string& id, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  guarded("1 scaling spectrum", criterion_1);
  guarded("2 soliton limit", criterion_2);
  guarded("3 harmonic limit", criterion_3);
  guarded("4 Morse fixture", criterion_4);
  guarded("5 algebra suite", criterion_5);
  guarded("6 matrix identities", criterion_6);
  guarded("7 coherent states", criterion_7);
  guarded("8 dynamics", criterion_8);
  guarded("9 reproducibility", criterion_9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
