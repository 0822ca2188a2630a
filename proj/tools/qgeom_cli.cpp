// Command-line front end: run the identity verification suites, integrate
// Hamiltonian flows, and exercise the reconstruction, pull-back and geometry
// reports.  Reports are deterministic for a fixed seed.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "qgeom/qgeom.hpp"
#include "qgeom/report.hpp"

namespace {

struct CommonOptions {
  qgeom::VerifyConfig cfg;
  std::string output = "json";  // json | csv
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--dim", opt.cfg.dim, "Mode count (1..3)")
      ->check(CLI::Range(1, 3))
      ->envname("QGEOM_DIM");
  cmd->add_option("--cutoff", opt.cfg.cutoff, "Per-mode occupation cutoff")
      ->check(CLI::Range(2, 64))
      ->envname("QGEOM_CUTOFF");
  cmd->add_option("--hbar", opt.cfg.hbar, "Value of hbar")
      ->check(CLI::PositiveNumber)
      ->envname("QGEOM_HBAR");
  cmd->add_option("--seed", opt.cfg.seed, "Random seed")->envname("QGEOM_SEED");
  cmd->add_option("--cases", opt.cfg.cases, "Random cases per identity")
      ->check(CLI::PositiveNumber)
      ->envname("QGEOM_CASES");
  cmd->add_option("--tolerance", opt.cfg.tolerance,
                  "Threshold of the standard identity class")
      ->check(CLI::PositiveNumber)
      ->envname("QGEOM_TOLERANCE");
  cmd->add_option("--output", opt.output, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("QGEOM_OUTPUT");
  cmd->add_option("--out-dir", opt.out_dir, "Write reports into this directory")
      ->envname("QGEOM_OUT_DIR");
}

int emit_report(const qgeom::SuiteReport& report, const CommonOptions& opt,
                const std::string& stem) {
  std::string body;
  if (opt.output == "csv") {
    std::ostringstream os;
    qgeom::write_report_csv(os, report);
    body = os.str();
  } else {
    body = qgeom::report_json(report).dump(2);
    body += "\n";
  }
  if (opt.out_dir.empty()) {
    std::cout << body;
  } else {
    std::filesystem::create_directories(opt.out_dir);
    std::filesystem::path path =
        std::filesystem::path(opt.out_dir) / (stem + "." + opt.output);
    std::ofstream os(path, std::ios::binary);
    os << body;
    std::cout << path.string() << "\n";
  }
  if (!report.all_passed) {
    for (const qgeom::SuiteEntry& e : report.entries)
      if (e.status == "fail")
        std::cerr << "FAIL " << e.name << " (" << e.paper_ref
                  << "): residual " << e.residual << " vs threshold "
                  << e.threshold << "\n";
    return 1;
  }
  return 0;
}

int run_suite(const CommonOptions& opt, const std::string& stem) {
  qgeom::SuiteReport report = qgeom::run_verification(opt.cfg);
  return emit_report(report, opt, stem);
}

int run_flow(const CommonOptions& opt, const std::string& hamiltonian, double omega,
             double t_end, double step) {
  qgeom::FockSpace space(opt.cfg.dim, opt.cfg.cutoff, opt.cfg.hbar);
  qgeom::CoordinateOperators ops = qgeom::coordinate_operators(space);
  std::mt19937_64 rng(opt.cfg.seed);

  qgeom::Operator h = qgeom::Operator::zero(space);
  if (hamiltonian == "harmonic") {
    for (int i = 0; i < space.modes(); ++i)
      h = h + ops.number[i] * qgeom::Complex(opt.cfg.hbar * omega) +
          qgeom::Operator::identity(space) * qgeom::Complex(0.5 * opt.cfg.hbar * omega);
  } else {
    h = qgeom::random_hermitian(space, rng);
  }
  qgeom::StateVector phi0 = qgeom::random_state(space, rng);
  qgeom::Trajectory traj = qgeom::integrate(h, phi0, t_end, step);

  std::vector<std::pair<std::string, qgeom::Operator>> observables;
  observables.emplace_back("x1", ops.x[0]);
  observables.emplace_back("p1", ops.p[0]);
  observables.emplace_back("n1", ops.number[0]);
  observables.emplace_back("energy", h);

  if (opt.out_dir.empty()) {
    qgeom::write_trajectory_csv(std::cout, traj, observables);
  } else {
    std::filesystem::create_directories(opt.out_dir);
    std::filesystem::path path = std::filesystem::path(opt.out_dir) / "trajectory.csv";
    std::ofstream os(path, std::ios::binary);
    qgeom::write_trajectory_csv(os, traj, observables);
    std::cout << path.string() << "\n";
  }

  // unitarity and energy conservation along the run
  double norm0 = phi0.norm2();
  double drift = 0.0, energy_drift = 0.0;
  double e0 = std::real(qgeom::eval_H(h, phi0).value);
  for (const qgeom::Vec& z : traj.states) {
    qgeom::StateVector phi(space, z);
    drift = std::max(drift, std::abs(phi.norm2() - norm0) / norm0);
    energy_drift = std::max(energy_drift,
                            std::abs(std::real(qgeom::eval_H(h, phi).value) - e0));
  }
  if (drift > 1e-8 || energy_drift > 1e-6 * std::max(1.0, std::abs(e0))) {
    std::cerr << "FAIL flow invariants: norm drift " << drift << ", energy drift "
              << energy_drift << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of the Kahler-geometric picture of "
               "quantum state space on a truncated Fock basis"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file with key = value lines");

  CommonOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run the identity suite");
  add_common(verify, verify_opt);
  verify->add_option("--suite", verify_opt.cfg.suite,
                     "Suite: all, kahler, geometry, fields, nc, pullback, flow, "
                     "reconstruct, negative-controls")
      ->envname("QGEOM_SUITE");

  CommonOptions flow_opt;
  std::string hamiltonian = "harmonic";
  double omega = 1.0, t_end = 6.2832, step = 1e-3;
  CLI::App* flow = app.add_subcommand("flow", "Integrate a Hamiltonian flow");
  add_common(flow, flow_opt);
  flow->add_option("--hamiltonian", hamiltonian, "harmonic or random")
      ->check(CLI::IsMember({"harmonic", "random"}));
  flow->add_option("--omega", omega, "Harmonic frequency")->check(CLI::PositiveNumber);
  flow->add_option("--t-end", t_end, "Integration time")->check(CLI::PositiveNumber);
  flow->add_option("--step", step, "Sampling step")->check(CLI::PositiveNumber);

  CommonOptions rec_opt, pull_opt, geom_opt;
  CLI::App* rec = app.add_subcommand("reconstruct", "Forward and inverse state recovery");
  add_common(rec, rec_opt);
  CLI::App* pull = app.add_subcommand("pullback", "Jacobian and symplectic pull-back report");
  add_common(pull, pull_opt);
  CLI::App* geom = app.add_subcommand("geometry", "Metric, Christoffel and Killing-reduction report");
  add_common(geom, geom_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return run_suite(verify_opt, "verify");
    if (flow->parsed()) return run_flow(flow_opt, hamiltonian, omega, t_end, step);
    if (rec->parsed()) {
      rec_opt.cfg.suite = "reconstruct";
      return run_suite(rec_opt, "reconstruct");
    }
    if (pull->parsed()) {
      pull_opt.cfg.suite = "pullback";
      return run_suite(pull_opt, "pullback");
    }
    if (geom->parsed()) {
      geom_opt.cfg.suite = "geometry";
      return run_suite(geom_opt, "geometry");
    }
  } catch (const qgeom::ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const qgeom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
