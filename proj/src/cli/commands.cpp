#include "siqm/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "siqm/cli/config.hpp"
#include "siqm/cli/csv.hpp"
#include "siqm/cli/manifest.hpp"
#include "siqm/coherent.hpp"
#include "siqm/dilation.hpp"
#include "siqm/dynamics.hpp"
#include "siqm/error.hpp"
#include "siqm/ladder.hpp"
#include "siqm/lattice.hpp"
#include "siqm/selfsimilar.hpp"
#include "siqm/spectra.hpp"

namespace siqm::cli {

namespace {

struct Outcome {
  Json results = Json::object();
  Json tolerances = Json::object();
  std::vector<std::string> outputs;
  bool pass = true;
};

using Runner = std::function<Outcome(const ParamSet&)>;

struct CommandSpec {
  std::string name;
  std::string help;
  std::vector<std::string> flags;
  std::vector<std::string> required;
  Runner run;
};

void collect_warning(std::string_view message, void* user) {
  static_cast<std::vector<std::string>*>(user)->emplace_back(message);
}

int checked_int(const ParamSet& p, const std::string& key, long long fallback, long long min_value) {
  const long long v = p.integer(key, fallback);
  if (v < min_value || v > 100000) {
    throw Error(ErrorKind::InvalidParameter, "--" + key + " must lie in [" + std::to_string(min_value) + ", 100000]");
  }
  return static_cast<int>(v);
}

double grid_reach(const Grid& g) { return std::max(std::abs(g.x_min()), std::abs(g.x_max())); }

FamilyName family_of(const ParamSet& p) { return family_name_from_string(p.text("family", "selfsimilar")); }

SpectrumTable spectrum_for(const ParamSet& p, int n_max) {
  const FamilyDescriptor d = descriptor_from_json(p.effective);
  if (d.name == FamilyName::SelfSimilar) return scaling_spectrum(d.q, d.c * d.a1, n_max);
  return energy_levels(family_from_params(p), n_max);
}

Json check(double residual, double tolerance) {
  return Json{{"residual", residual}, {"tolerance", tolerance}, {"pass", residual <= tolerance}};
}

// Spectrum ---------------------------------------------------------------

Outcome cmd_spectrum(const ParamSet& p) {
  const FamilyName name = family_of(p);
  const Grid grid = grid_from_params(p, name);
  const PotentialFamily family = family_from_params(p, grid_reach(grid));
  const int n = checked_int(p, "levels", 6, 0);

  Outcome o;
  std::vector<std::string> warnings;
  const SpectrumTable table = energy_levels(family, n);
  FdSpectrum fd;
  double si = 0.0;
  {
    diagnostics::ScopedSink sink(collect_warning, &warnings);
    fd = fd_diagonalize(family, grid, n + 1);
    si = shape_invariance_residual(family, grid, dilation_test_functions(grid));
  }

  constexpr double tol = 1e-3;
  CsvTable csv({"n", "E_ladder", "E_fd", "abs_err"});
  Json rows = Json::array();
  double worst = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double err = std::abs(table[k] - fd.energies[static_cast<std::size_t>(k)]);
    const double allowed = tol * std::max(1.0, table[k]);
    worst = std::max(worst, err / std::max(1.0, table[k]));
    csv.add_row({format_integer(k), format_number(table[k]), format_number(fd.energies[static_cast<std::size_t>(k)]),
                 format_number(err)});
    rows.push_back({{"n", k}, {"E_ladder", table[k]}, {"E_fd", fd.energies[static_cast<std::size_t>(k)]},
                    {"abs_err", err}, {"edge_weight", fd.edge_weights[static_cast<std::size_t>(k)]},
                    {"pass", err <= allowed}});
  }
  o.tolerances["oracle_equivalence"] = "1e-3 * max(1, E_n)";
  o.tolerances["shape_invariance_gate"] = kShapeInvarianceGate;
  o.results["levels"] = rows;
  o.results["oracle_equivalence"] = check(worst, tol);
  o.results["shape_invariance"] = check(si, kShapeInvarianceGate);
  o.results["fd_ground_offset"] = fd.ground_offset;
  o.results["warnings"] = warnings;
  o.pass = worst <= tol && si <= kShapeInvarianceGate;

  const std::string out = p.text("out", "");
  if (!out.empty()) {
    csv.write(out);
    o.outputs.push_back(out);
  }
  return o;
}

// Series coefficients -----------------------------------------------------

Outcome cmd_coeffs(const ParamSet& p) {
  const double q = p.number("q", 0.5);
  const double c0 = p.number("c0", 1.0);
  const int order = checked_int(p, "order", 8, 1);
  const SeriesCoefficients coeffs = series_coefficients(q, c0, order);

  Outcome o;
  CsvTable csv({"k", "c_k"});
  for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k) {
    csv.add_row({format_integer(static_cast<long long>(k)), format_number(coeffs.coeffs[k])});
  }
  o.results["coefficients"] = coeffs.coeffs;
  o.results["remainder"] = coeffs.remainder();
  const RadiusEstimate r = radius_estimate(coeffs);
  o.results["radius_estimate"] =
      std::isnan(r.radius) ? Json(nullptr) : std::isinf(r.radius) ? Json("inf") : Json(r.radius);
  o.results["monotone_tail"] = r.monotone_tail;

  const std::string out = p.text("out", "");
  if (!out.empty()) {
    csv.write(out);
    o.outputs.push_back(out);
  }

  if (p.has("grid-points") || p.has("grid-min") || p.has("grid-max")) {
    const Grid grid = build_grid(p.number("grid-min", -10.0), p.number("grid-max", 10.0),
                                 p.integer("grid-points", 2001));
    // The table needs enough coefficients for a radius estimate.
    const SeriesCoefficients full = series_coefficients(q, c0, std::max(order, 120));
    ContinuationOptions opts;
    opts.horizon = std::max(1.0, 1.05 * grid_reach(grid));
    const SelfSimilarSolution sol(full, opts);
    CsvTable table({"x", "W"});
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.n_points(); ++i) {
      const double x = grid.x(i);
      table.add_row({format_number(x), format_number(sol.W(x))});
      worst = std::max(worst, sol.defining_residual(x));
    }
    const double tol = 1e-6 * std::max(1.0, full.remainder());
    o.results["defining_residual"] = check(worst, tol);
    o.results["asymptote"] = std::isfinite(sol.asymptote()) ? Json(sol.asymptote()) : Json("inf");
    o.tolerances["defining_residual"] = tol;
    o.pass = o.pass && worst <= tol;
    const std::string path = out.empty() ? std::string("siqm-W.csv") : out + ".W.csv";
    table.write(path);
    o.outputs.push_back(path);
  }
  return o;
}

// Eigenstates ---------------------------------------------------------------

Outcome cmd_eigenstates(const ParamSet& p) {
  const FamilyName name = family_of(p);
  const Grid grid = grid_from_params(p, name);
  const PotentialFamily family = family_from_params(p, grid_reach(grid));
  const int n = checked_int(p, "levels", 3, 0);

  Outcome o;
  std::vector<std::string> warnings;
  std::vector<WaveFunctionGrid> states;
  Json rows = Json::array();
  constexpr double overlap_tol = 1e-6;
  constexpr double residual_tol = 1e-4;
  constexpr double ortho_tol = 1e-6;
  double worst_overlap = 0.0;
  double worst_residual = 0.0;
  {
    diagnostics::ScopedSink sink(collect_warning, &warnings);
    const SpectrumTable table = energy_levels(family, n);
    const FdSpectrum fd = fd_diagonalize(family, grid, n + 1);
    for (int k = 0; k <= n; ++k) {
      const EigenstateBuild b = build_eigenstate_detailed(family, k, grid);
      const double overlap = std::norm(inner_product(fd.states[static_cast<std::size_t>(k)], b.psi));
      const double res = eigen_residual(family, b.psi, table[k]);
      worst_overlap = std::max(worst_overlap, 1.0 - overlap);
      worst_residual = std::max(worst_residual, res);
      rows.push_back({{"n", k}, {"raw_norm", b.raw_norm}, {"expected_norm", b.expected_norm},
                      {"fd_overlap", overlap}, {"eigen_residual", res}});
      states.push_back(b.psi);
    }
  }
  double worst_ortho = 0.0;
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      const complex ip = inner_product(states[a], states[b]);
      worst_ortho = std::max(worst_ortho, std::abs(ip - complex(a == b ? 1.0 : 0.0)));
    }
  }

  std::vector<std::string> header = {"x"};
  for (int k = 0; k <= n; ++k) {
    header.push_back("re_psi_" + std::to_string(k));
    header.push_back("im_psi_" + std::to_string(k));
  }
  CsvTable csv(header);
  for (std::size_t i = 0; i < grid.n_points(); ++i) {
    std::vector<std::string> cells = {format_number(grid.x(i))};
    for (const auto& s : states) {
      cells.push_back(format_number(s[i].real()));
      cells.push_back(format_number(s[i].imag()));
    }
    csv.add_row(std::move(cells));
  }

  o.results["levels"] = rows;
  o.results["fd_overlap_defect"] = check(worst_overlap, overlap_tol);
  o.results["eigen_residual"] = check(worst_residual, residual_tol);
  o.results["orthonormality"] = check(worst_ortho, ortho_tol);
  o.results["warnings"] = warnings;
  o.tolerances = {{"fd_overlap_defect", overlap_tol}, {"eigen_residual", residual_tol}, {"orthonormality", ortho_tol}};
  o.pass = worst_overlap <= overlap_tol && worst_residual <= residual_tol && worst_ortho <= ortho_tol;

  const std::string out = p.text("out", "");
  if (!out.empty()) {
    csv.write(out);
    o.outputs.push_back(out);
  }
  return o;
}

// Verify ------------------------------------------------------------------

constexpr double kLatticeTolerance = 1e-6;
constexpr double kAdjointTolerance = 1e-8;
constexpr double kDilationTolerance = 1e-5;

void add_relation_checks(const Lattice& lattice, const std::vector<RelationId>& ids, Json& report) {
  for (RelationId id : ids) {
    if (!relation_applicable(id, lattice.family())) {
      report[to_string(id)] = {{"applicable", false}};
      continue;
    }
    report[to_string(id)] = check(commutator_residual(id, lattice), kLatticeTolerance);
  }
}

Json suite_report(const std::string& suite, const ParamSet& p) {
  const FamilyName name = family_of(p);
  Json report = Json::object();

  if (suite == "matrix-identities") {
    const int N = checked_int(p, "levels", 20, 3);
    const MatrixIdentityReport r = matrix_identities(spectrum_for(p, N), N);
    for (const auto& c : r.checks) report[c.id] = check(c.residual, c.tolerance);
    return report;
  }

  const Grid grid = grid_from_params(p, name);
  const PotentialFamily family = family_from_params(p, grid_reach(grid));

  if (suite == "shape-invariance") {
    report["shape-invariance"] = check(shape_invariance_residual(family, grid, dilation_test_functions(grid)),
                                       kShapeInvarianceGate);
    const WaveFunctionGrid psi0 = ground_state(family, family.a1(), grid);
    const auto a_psi = apply_ladder(eval_W(family, family.a1(), grid), psi0, LadderMode::Lowering);
    report["annihilation"] = check(a_psi.interior_norm(0.9) / psi0.interior_norm(0.9), 1e-6);
    return report;
  }
  if (suite == "dilation") {
    const auto fns = dilation_test_functions(grid);
    const double r3 = dilation_identity_residual(family, grid, DilationIdentity::Direct, fns);
    const double r6 = dilation_identity_residual(family, grid, DilationIdentity::Conjugated, fns);
    report["yy3"] = check(r3, kDilationTolerance);
    report["yy6"] = check(r6, kDilationTolerance);
    return report;
  }

  const int window = checked_int(p, "levels", 8, static_cast<long long>(Lattice::min_window));
  const Lattice lattice(family, grid, static_cast<std::size_t>(window));
  if (suite == "lattice-algebra") {
    add_relation_checks(lattice, all_relations(), report);
    // phi on a middle level, psi one level up, so B+ psi and B- phi both
    // land on interior levels.
    LatticeState phi = lattice.zero_state();
    LatticeState psi = lattice.zero_state();
    const std::size_t mid = lattice.window() / 2 - 1;
    phi.components[mid] = sample(grid, [](double x) { return std::exp(-0.5 * x * x) * std::exp(complex(0.0, 0.4 * x)); });
    psi.components[mid + 1] = sample(grid, [](double x) { return std::exp(-0.5 * (x - 0.3) * (x - 0.3)); });
    report["adjoint-b"] = check(adjoint_defect(b_plus(), b_minus(), lattice, phi, psi), kAdjointTolerance);
    return report;
  }
  if (suite == "q-oscillator") {
    add_relation_checks(lattice,
                        {RelationId::ScaledBracket, RelationId::ScaledRemainder, RelationId::NonClosure1,
                         RelationId::NonClosure2, RelationId::NonClosure3, RelationId::QOscillator},
                        report);
    return report;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown suite '" + suite + "'");
}

Outcome cmd_verify(const ParamSet& p) {
  const std::string suite = p.text("suite", "");
  Outcome o;
  const Json report = suite_report(suite, p);
  std::vector<std::string> failing;
  for (const auto& [id, entry] : report.items()) {
    if (entry.contains("pass") && !entry["pass"].get<bool>()) failing.push_back(id);
  }
  o.results["suite"] = suite;
  o.results["relations"] = report;
  o.results["failing"] = failing;
  o.tolerances = {{"lattice", kLatticeTolerance}, {"adjoint", kAdjointTolerance}, {"dilation", kDilationTolerance},
                  {"matrix", kMatrixIdentityTolerance}, {"shape_invariance", kShapeInvarianceGate}};
  o.pass = failing.empty();

  for (const char* key : {"report", "out"}) {
    const std::string path = p.text(key, "");
    if (!path.empty()) {
      write_json(report, path);
      o.outputs.push_back(path);
      break;
    }
  }
  return o;
}

// Coherent states -----------------------------------------------------------

Outcome cmd_coherent(const ParamSet& p) {
  const int N = checked_int(p, "levels", 20, 4);
  const complex z(p.number("z-re", 0.3), p.number("z-im", 0.0));
  const SpectrumTable levels = spectrum_for(p, N - 1);
  const CoherentState state = coherent_recursive(levels, z, N);
  const LadderMatrices ladder = build_ladder_matrices(levels, N);
  const CoherentResiduals r = coherent_property_residuals(state, ladder);

  constexpr double eigen_tol = 1e-10;
  constexpr double deriv_tol = 1e-6;
  Outcome o;
  o.results["eigen_residual"] = check(r.eigen_residual, eigen_tol);
  o.results["derivative_residual"] = check(r.derivative_residual, deriv_tol);
  o.results["termwise_defect"] = r.termwise_defect;
  o.results["literal_eigen_residual"] = r.literal_eigen_residual;
  double partial = 0.0;
  for (const auto& c : state.coefficients) partial += std::norm(c);
  o.results["partial_norm_squared"] = partial;
  o.tolerances = {{"eigen_residual", eigen_tol}, {"derivative_residual", deriv_tol}};
  o.pass = r.eigen_residual <= eigen_tol && r.derivative_residual <= deriv_tol;

  const FamilyDescriptor d = descriptor_from_json(p.effective);
  if (d.name == FamilyName::SelfSimilar && d.q > 0.0 && d.q < 1.0) {
    // Throws when the closed form disagrees with the recursion.
    const CoherentState closed = coherent_closed_scaling(d.q, d.c * d.a1, z, N);
    double worst = 0.0;
    for (int n = 0; n < N; ++n) {
      const auto i = static_cast<std::size_t>(n);
      worst = std::max(worst, std::abs(closed.coefficients[i] - state.coefficients[i]) / std::abs(state.coefficients[i]));
    }
    o.results["closed_form_agreement"] = check(worst, 1e-12);
    o.tolerances["closed_form_agreement"] = 1e-12;
    o.pass = o.pass && worst <= 1e-12;
  }

  CsvTable csv({"n", "re", "im"});
  for (int n = 0; n < N; ++n) {
    const complex h = state.coefficients[static_cast<std::size_t>(n)];
    csv.add_row({format_integer(n), format_number(h.real()), format_number(h.imag())});
  }
  const std::string out = p.text("out", "");
  if (!out.empty()) {
    csv.write(out);
    o.outputs.push_back(out);
  }
  return o;
}

// Forced evolution ----------------------------------------------------------

Outcome cmd_evolve(const ParamSet& p) {
  EvolveOptions opts;
  opts.dimension = checked_int(p, "levels", 30, 2);
  opts.t_max = p.number("t-max", 5.0);
  opts.dt = p.number("dt", 0.01);
  opts.sign = phase_sign_from_string(p.text("phase-sign", "conjugate"));
  const Drive drive = Drive::parse(p.text("drive", "const:0.1"));
  const SpectrumTable levels = spectrum_for(p, opts.dimension - 1);
  const ForcedEvolution ev = evolve_forced(levels, drive, opts);

  Outcome o;
  const FamilyDescriptor d = descriptor_from_json(p.effective);
  const bool oscillator = d.name == FamilyName::Harmonic || (d.name == FamilyName::SelfSimilar && d.q == 1.0);
  o.results["final_overlap_direct_closed"] = ev.final_overlap;
  o.results["norm_drift"] = check(ev.max_norm_drift, opts.norm_tolerance);
  o.results["top_population"] = ev.max_top_population;
  o.results["dt_accepted"] = ev.dt;
  o.results["halvings"] = ev.halvings;
  o.results["convergence_change"] = ev.convergence_change;
  o.results["best_fit_z"] = {ev.best_fit_z.real(), ev.best_fit_z.imag()};
  o.results["coherent_overlap"] = ev.coherent_overlap;
  o.results["ladder_eigenvector_overlap"] = ev.ladder_overlap;
  o.tolerances = {{"norm_drift", opts.norm_tolerance}, {"truncation_budget", opts.truncation_budget},
                  {"convergence", opts.convergence_tolerance}};
  o.pass = ev.max_norm_drift <= opts.norm_tolerance;
  if (oscillator && opts.sign == PhaseSign::Conjugate) {
    o.results["closed_form_check"] = check(1.0 - ev.final_overlap, 1e-6);
    o.tolerances["closed_form_check"] = 1e-6;
    o.pass = o.pass && 1.0 - ev.final_overlap <= 1e-6;
  }

  std::vector<std::string> header = {"t", "norm", "overlap_closed"};
  for (int k = 0; k < opts.dimension; ++k) {
    header.push_back("re_" + std::to_string(k));
    header.push_back("im_" + std::to_string(k));
  }
  CsvTable csv(header);
  for (std::size_t i = 0; i < ev.times.size(); ++i) {
    std::vector<std::string> cells = {format_number(ev.times[i]), format_number(ev.direct[i].norm()),
                                      format_number(ev.overlaps[i])};
    for (int k = 0; k < opts.dimension; ++k) {
      cells.push_back(format_number(ev.direct[i](k).real()));
      cells.push_back(format_number(ev.direct[i](k).imag()));
    }
    csv.add_row(std::move(cells));
  }
  const std::string out = p.text("out", "");
  if (!out.empty()) {
    csv.write(out);
    o.outputs.push_back(out);
  }
  return o;
}

const std::vector<CommandSpec>& commands() {
  static const std::vector<std::string> family_flags = {"family", "q", "c", "a1"};
  static const std::vector<std::string> grid_flags = {"grid-min", "grid-max", "grid-points"};
  static const std::vector<std::string> io_flags = {"config", "out", "report"};
  auto join = [](std::initializer_list<std::vector<std::string>> parts) {
    std::vector<std::string> all;
    for (const auto& part : parts) all.insert(all.end(), part.begin(), part.end());
    return all;
  };
  static const std::vector<CommandSpec> specs = {
      {"spectrum", "ladder energies against the finite-difference oracle",
       join({family_flags, {"levels", "w-perturb"}, grid_flags, io_flags}), {}, cmd_spectrum},
      {"coeffs", "self-similar series coefficients (and a W table with grid flags)",
       join({{"q", "c0", "order"}, grid_flags, io_flags}), {"q"}, cmd_coeffs},
      {"eigenstates", "ladder-built eigenfunctions with oracle overlaps",
       join({family_flags, {"levels", "w-perturb"}, grid_flags, io_flags}), {}, cmd_eigenstates},
      {"verify", "operator identity suites",
       join({family_flags, {"levels", "suite", "w-perturb"}, grid_flags, io_flags}), {"suite"}, cmd_verify},
      {"coherent", "coherent-state coefficients and their defining properties",
       join({family_flags, {"levels", "z-re", "z-im"}, io_flags}), {}, cmd_coherent},
      {"evolve", "forced ladder evolution against the closed form",
       join({family_flags, {"levels", "drive", "t-max", "dt", "phase-sign"}, io_flags}), {}, cmd_evolve},
  };
  return specs;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"siqm: shape-invariant and self-similar potentials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  struct Bound {
    const CommandSpec* spec;
    CLI::App* sub;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& spec : commands()) {
    auto b = std::make_unique<Bound>();
    b->spec = &spec;
    b->sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& flag : spec.flags) {
      b->options[flag] = b->sub->add_option("--" + flag, b->values[flag], flag_spec(flag).help);
    }
    bound.push_back(std::move(b));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }

  Bound* selected = nullptr;
  for (auto& b : bound) {
    if (b->sub->parsed()) selected = b.get();
  }
  if (selected == nullptr) {
    err << "no subcommand given\n";
    return kExitValidation;
  }
  const CommandSpec& spec = *selected->spec;

  ParamSet params;
  try {
    std::map<std::string, std::string> given;
    for (const auto& [flag, opt] : selected->options) {
      if (opt->count() > 0) given[flag] = selected->values[flag];
    }
    Json config = Json::object();
    std::string config_path;
    if (given.count("config")) {
      config_path = given["config"];
      std::vector<std::string> allowed;
      for (const auto& f : spec.flags) {
        if (f != "config") allowed.push_back(f);
      }
      config = load_config(config_path, allowed);
    }
    params = merge_params(config, given);
    params.config_path = config_path;
    for (const auto& req : spec.required) {
      if (!params.has(req)) throw Error(ErrorKind::InvalidParameter, "missing required flag --" + req);
    }
  } catch (const Error& e) {
    err << "siqm " << spec.name << ": " << e.what() << "\n";
    return kExitValidation;
  }

  RunManifest manifest;
  manifest.command = spec.name;
  manifest.params = params.to_json();
  const std::string out_path = params.text("out", "");
  const std::string report_path = params.text("report", "");
  int code = kExitSuccess;
  try {
    Outcome o = spec.run(params);
    manifest.results = o.results;
    manifest.tolerances = o.tolerances;
    manifest.outputs = o.outputs;
    code = o.pass ? kExitSuccess : kExitNumerical;
    out << spec.name << ": " << (o.pass ? "ok" : "tolerance exceeded") << "\n";
  } catch (const Error& e) {
    if (e.is_validation()) {
      err << "siqm " << spec.name << ": " << e.what() << "\n";
      return kExitValidation;
    }
    manifest.results = {{"error", e.what()}, {"kind", std::string(to_string(e.kind()))}};
    err << "siqm " << spec.name << ": " << e.what() << "\n";
    code = kExitNumerical;
  } catch (const std::exception& e) {
    err << "siqm " << spec.name << ": " << e.what() << "\n";
    return kExitValidation;
  }

  manifest.timestamp = iso8601_now();
  const std::string path = manifest_path(spec.name, out_path, report_path);
  try {
    write_manifest(manifest, path);
  } catch (const Error& e) {
    err << "siqm " << spec.name << ": " << e.what() << "\n";
    return kExitValidation;
  }
  out << "manifest: " << path << "\n";
  return code;
}

int run_command(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace siqm::cli
