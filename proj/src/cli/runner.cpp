#include "cli/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "krein/evolution.hpp"
#include "krein/hamiltonian.hpp"
#include "krein/spectrum.hpp"
#include "krein/state.hpp"

namespace krein::cli {

namespace {

Grid make_grid(const RunConfig& cfg) {
  return cfg.grid_boundary == "periodic"
             ? Grid::periodic(cfg.grid_n_points, cfg.grid_half_width)
             : Grid::dirichlet(cfg.grid_n_points, cfg.grid_half_width);
}

PotentialSpec make_potential(const RunConfig& cfg, const Grid& grid) {
  if (cfg.potential_kind == "zero") return PotentialSpec::zero();
  if (cfg.potential_kind == "harmonic")
    return PotentialSpec::harmonic(cfg.potential_omega);
  if (cfg.potential_kind == "bender")
    return PotentialSpec::bender_family(cfg.potential_epsilon);
  if (cfg.potential_kind == "imaginary_cubic")
    return PotentialSpec::imaginary_cubic();

  // custom: one "re,im" line per grid node
  std::ifstream in(cfg.potential_file);
  if (!in) throw ConfigError("cannot open potential file '" + cfg.potential_file + "'");
  std::vector<Complex> samples;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (!(ss >> re >> im))
      throw ConfigError(cfg.potential_file + ":" + std::to_string(lineno) +
                        ": expected 're,im'");
    samples.emplace_back(re, im);
  }
  if (static_cast<int>(samples.size()) != grid.n_points())
    throw ConfigError("potential file has " + std::to_string(samples.size()) +
                      " samples, grid has " + std::to_string(grid.n_points()));
  return PotentialSpec::from_samples(std::move(samples));
}

ComplexVector load_state_file(const std::string& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open state file '" + path + "'");
  std::vector<Complex> amps;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double re = 0.0, im = 0.0;
    if (!(ss >> re >> im))
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 're,im'");
    amps.emplace_back(re, im);
  }
  if (static_cast<int>(amps.size()) != grid.n_points())
    throw ConfigError("state file has " + std::to_string(amps.size()) +
                      " samples, grid has " + std::to_string(grid.n_points()));
  ComplexVector v(grid.n_points());
  for (int k = 0; k < grid.n_points(); ++k) v(k) = amps[k];
  return v;
}

struct Problem {
  Grid grid;
  PhysicalConstants constants;
  ComplexVector potential;
  ComplexMatrix hamiltonian;
  Involution parity;
};

Problem build_problem(const RunConfig& cfg) {
  const Grid grid = make_grid(cfg);
  const PhysicalConstants constants(cfg.hbar, cfg.mass);
  const PotentialSpec pot = make_potential(cfg, grid);
  HamiltonianSpec spec{grid, constants, pot, cfg.stencil_order};
  return Problem{grid, constants, sample_potential(pot, grid, constants),
                 build_hamiltonian(spec), Involution::parity(grid)};
}

ResultBundle base_bundle(const RunConfig& cfg) {
  ResultBundle b;
  b.config = cfg.echo();
  b.version = kVersion;
  b.timestamp = make_timestamp();
  return b;
}

void add_structure_verdicts(ResultBundle& bundle, const Problem& p,
                            const RunConfig& cfg) {
  const double vscale = std::max(1.0, p.potential.cwiseAbs().maxCoeff());
  const auto pt = is_pt_symmetric_potential(p.potential, p.grid, 1e-10 * vscale);
  bundle.verdicts.push_back({"pt_symmetric_potential", pt.passed, pt.residual, true});

  const auto jh = is_j_hermitian(p.hamiltonian, p.parity,
                                 default_hermiticity_tol(p.hamiltonian));
  bundle.verdicts.push_back({"j_hermitian_hamiltonian", jh.passed, jh.residual, true});

  double max_im_v = 0.0;
  for (int k = 0; k < p.potential.size(); ++k)
    max_im_v = std::max(max_im_v, std::abs(p.potential(k).imag()));
  bundle.verdicts.push_back(
      {"real_potential", max_im_v <= 1e-12 * vscale, max_im_v, false});
  (void)cfg;
}

StateVector initial_state(const RunConfig& cfg, const Problem& p) {
  if (cfg.initial_kind == "gaussian")
    return gaussian_state(p.grid, cfg.initial_center, cfg.initial_width,
                          cfg.initial_momentum);
  if (cfg.initial_kind == "file")
    return normalized(StateVector(p.grid, load_state_file(cfg.initial_file, p.grid)));

  // eigenstate(index): null states are skipped unless include_null_states
  const SpectrumReport report = classify_spectrum(
      p.hamiltonian, p.parity, cfg.null_tol, cfg.reality_tol);
  std::vector<int> selectable;
  for (int i = 0; i < static_cast<int>(report.pairs.size()); ++i) {
    if (cfg.include_null_states ||
        report.pairs[i].classification != KreinClass::null)
      selectable.push_back(i);
  }
  if (cfg.initial_index >= static_cast<int>(selectable.size()))
    throw ConfigError("initial.index " + std::to_string(cfg.initial_index) +
                      " out of range (" + std::to_string(selectable.size()) +
                      " selectable eigenstates)");
  const EigenPair& pair = report.pairs[selectable[cfg.initial_index]];
  return normalized(StateVector(p.grid, pair.vector));
}

}  // namespace

RunResult run_spectrum(const RunConfig& cfg) {
  const Problem p = build_problem(cfg);
  RunResult result;
  result.bundle = base_bundle(cfg);
  add_structure_verdicts(result.bundle, p, cfg);

  const SpectrumReport report = classify_spectrum(
      p.hamiltonian, p.parity, cfg.null_tol, cfg.reality_tol);
  result.bundle.has_spectrum = true;
  for (int i = 0; i < static_cast<int>(report.pairs.size()); ++i) {
    const EigenPair& pr = report.pairs[i];
    if (!cfg.include_null_states && pr.classification == KreinClass::null)
      continue;
    result.bundle.spectrum.push_back({i, pr.value.real(), pr.value.imag(),
                                      pr.krein_norm, to_string(pr.classification),
                                      pr.residual});
    result.bundle.max_solver_residual =
        std::max(result.bundle.max_solver_residual, pr.residual);
  }

  const RealityVerdict reality = verify_reality_theorem(report);
  result.bundle.verdicts.push_back({"reality_theorem",
                                    reality.applicable && reality.passed,
                                    double(reality.violations.size()), true});

  bool violations = !reality.applicable || !reality.passed;
  for (const auto& v : result.bundle.verdicts)
    if (v.required && !v.passed) violations = true;
  result.exit_code = violations ? 2 : 0;
  return result;
}

RunResult run_evolve(const RunConfig& cfg) {
  const Problem p = build_problem(cfg);
  RunResult result;
  result.bundle = base_bundle(cfg);
  add_structure_verdicts(result.bundle, p, cfg);

  const StateVector psi0 = initial_state(cfg, p);
  const EvolutionTrace trace =
      evolve(psi0, p.hamiltonian, cfg.t_final, cfg.n_steps, p.parity,
             /*record_snapshots=*/true, p.constants);

  result.bundle.has_trace = true;
  result.bundle.times = trace.times;
  result.bundle.krein_norms = trace.krein_norms;
  result.bundle.dirac_norms = trace.dirac_norms;
  result.bundle.continuity_residuals.assign(trace.times.size(),
                                            std::nan(""));
  if (trace.snapshots.size() >= 3 && cfg.t_final > 0.0) {
    const ContinuityTrace cont = continuity_residual(
        trace.snapshots, p.grid, cfg.t_final / cfg.n_steps, p.potential,
        p.constants);
    for (std::size_t s = 0; s < cont.max_residual_per_step.size(); ++s)
      result.bundle.continuity_residuals[s + 1] = cont.max_residual_per_step[s];
  }
  if (cfg.write_snapshots) result.snapshots = trace.snapshots;
  result.exit_code = 0;
  return result;
}

RunResult run_check(const RunConfig& cfg) {
  const Problem p = build_problem(cfg);
  RunResult result;
  result.bundle = base_bundle(cfg);
  add_structure_verdicts(result.bundle, p, cfg);

  const ComplexMatrix t_op = build_kinetic(p.grid, p.constants, cfg.stencil_order);
  const auto axioms = adjoint_axiom_residuals(p.hamiltonian, t_op,
                                              Complex(0.0, 1.0), p.parity);
  const double hscale = std::max(1.0, p.hamiltonian.cwiseAbs().maxCoeff());
  double axiom_residual = std::max({axioms.additivity,
                                    axioms.conjugate_homogeneity,
                                    axioms.double_adjoint});
  // product and inverse residuals scale with |H| |T|
  const double prod_scale = hscale * std::max(1.0, t_op.cwiseAbs().maxCoeff());
  axiom_residual = std::max(axiom_residual, axioms.product_reversal / prod_scale);
  result.bundle.verdicts.push_back(
      {"adjoint_axioms", axiom_residual <= 1e-10 * hscale, axiom_residual, true});

  const double japrod = j_product_adjoint_residual(p.hamiltonian, p.parity);
  result.bundle.verdicts.push_back(
      {"j_product_adjoint_identity", japrod <= 1e-10 * hscale, japrod, true});

  // unitarity probed at a short time so non-normal growth cannot overflow
  const double t_check = 1.0 / hscale;
  const Propagator u = propagator(p.hamiltonian, t_check, p.constants);
  const auto ku = check_krein_unitarity(u, p.parity, cfg.unitarity_tol);
  result.bundle.verdicts.push_back(
      {"krein_unitary_propagator", ku.passed, ku.residual, true});
  const auto hu = check_hilbert_unitarity(u, cfg.unitarity_tol);
  result.bundle.verdicts.push_back(
      {"hilbert_unitary_propagator", hu.passed, hu.residual, false});

  result.exit_code = 0;
  for (const auto& v : result.bundle.verdicts)
    if (v.required && !v.passed) result.exit_code = 2;
  return result;
}

RunResult run(const RunConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path out(cfg.out_dir);
  fs::create_directories(out);

  RunResult result;
  switch (cfg.command) {
    case Command::spectrum: result = run_spectrum(cfg); break;
    case Command::evolve: result = run_evolve(cfg); break;
    case Command::check: result = run_check(cfg); break;
  }

  const std::string bundle_path = (out / "bundle.json").string();
  check_writable(bundle_path, cfg.force);
  write_bundle_json(result.bundle, bundle_path);

  if (result.bundle.has_spectrum) {
    const std::string csv = (out / "spectrum.csv").string();
    check_writable(csv, cfg.force);
    write_spectrum_csv(result.bundle, csv);
  }
  if (result.bundle.has_trace) {
    const std::string csv = (out / "trace.csv").string();
    check_writable(csv, cfg.force);
    write_trace_csv(result.bundle, csv);
    for (std::size_t s = 0; s < result.snapshots.size(); ++s) {
      char name[32];
      std::snprintf(name, sizeof(name), "snapshot_%04zu.csv", s);
      const std::string path = (out / name).string();
      check_writable(path, cfg.force);
      std::ofstream snap(path);
      snap << "x,re_psi,im_psi\n";
      const StateVector& psi = result.snapshots[s];
      for (int k = 0; k < psi.grid.n_points(); ++k) {
        snap << format_number(psi.grid.node(k)) << ','
             << format_number(psi.amplitudes(k).real()) << ','
             << format_number(psi.amplitudes(k).imag()) << '\n';
      }
    }
    if (cfg.plot) {
      const std::string svg = (out / "norms.svg").string();
      check_writable(svg, cfg.force);
      write_norms_svg(result.bundle, svg);
    }
  }

  for (const auto& v : result.bundle.verdicts) {
    std::cout << (v.passed ? "pass " : "FAIL ") << v.name
              << "  residual=" << format_number(v.residual)
              << (v.required ? "" : "  [informational]") << '\n';
  }
  return result;
}

}  // namespace krein::cli
