// Command-line front end: computes effective drift and diffusion coefficients
// of 1D kinetic Fokker-Planck operators by spectral decomposition of the
// unitarily equivalent Schroedinger operator.
//
// Exit codes: 0 ok, 2 bad parameter, 3 tunnelling collapse, 4 no convergence,
// 5 I/O failure.
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fpspectral/csvio.hpp"
#include "fpspectral/errors.hpp"
#include "fpspectral/operators.hpp"
#include "fpspectral/run.hpp"

namespace {

using fpspectral::RunConfig;

// Wires the flags shared by all subcommands; flags override whatever the
// --config document set.
void add_common_options(CLI::App* cmd, RunConfig& config, std::string& case_name, std::string& rule,
                        std::string& solver) {
  cmd->add_option("-c,--case", case_name, "potential case: A, B, C, custom or quadratic");
  cmd->add_option("--gamma", config.gamma, "scale parameter of the quartic well");
  cmd->add_option("--theta", config.theta, "noise strength");
  cmd->add_option("--delta", config.delta, "tilt strength (case C/custom)");
  cmd->add_option("--sigma", config.sigma, "1 selects the |v|^3 friction term (custom case)");
  cmd->add_option("--vartheta", config.vartheta, "diffusivity of the quadratic reference");
  cmd->add_option("-R,--domain", config.R, "half-width of the truncated domain");
  cmd->add_option("-n,--elements", config.n_elements, "number of uniform elements (even)");
  cmd->add_option("-p,--degree", config.degree, "polynomial degree per element");
  cmd->add_option("-q,--quad-degree", config.quad_degree, "polynomial exactness of the element rule");
  cmd->add_option("-N,--modes", config.N_max, "maximum number of retained eigenmodes");
  cmd->add_option("--rel-tol", config.rel_tol, "auto-truncation relative tolerance");
  cmd->add_option("--tol-zero", config.tol_zero, "zero-mode identification tolerance");
  cmd->add_option("--s-tol", config.s_tol, "symmetry-breaking score threshold");
  cmd->add_option("--solver-tol", config.solver_tol, "eigensolver residual tolerance");
  cmd->add_option("--oracle-tol", config.oracle_tol, "drift-vs-oracle report threshold");
  cmd->add_option("--rule", rule, "fourier quadrature rule: rectangle or gauss");
  cmd->add_option("--solver", solver, "eigensolver: auto, dense or lanczos");
  cmd->add_option("-o,--out", config.output_dir, "output directory");
  cmd->add_option("--format", config.formats, "output formats (csv, svg)")->delimiter(',');
  cmd->add_flag("--dump-eigenfunctions", config.dump_eigenfunctions,
                "also write eigenfunction node values");
  cmd->add_flag("--dump-operators", config.dump_operators,
                "dump stiffness/mass matrices as sparse triplets");
}

void finalize_config(RunConfig& config, const std::string& case_name, const std::string& rule,
                     const std::string& solver) {
  if (!case_name.empty()) config.case_name = fpspectral::parse_case(case_name);
  if (!rule.empty()) config.fourier_rule = fpspectral::parse_fourier_rule(rule);
  if (!solver.empty()) config.solver = fpspectral::parse_solver(solver);
}

void print_point(const fpspectral::PointResult& point) {
  std::printf("status            %s\n", point.status.c_str());
  if (!point.message.empty()) std::printf("message           %s\n", point.message.c_str());
  std::printf("vartheta          %.17g\n", point.vartheta);
  std::printf("Z                 %.17g\n", point.Z);
  std::printf("V                 %.17g\n", point.V);
  if (!point.eigenvalues.empty()) {
    std::printf("lambda_0..4      ");
    for (std::size_t i = 0; i < point.eigenvalues.size() && i < 5; ++i) {
      std::printf(" %.10g", point.eigenvalues[i]);
    }
    std::printf("\n");
    std::printf("gap               %.10g\n", point.gap);
  }
  if (!point.symmetry.empty()) {
    std::printf("symmetry scores   %.3e %.3e%s\n", point.symmetry[0].score, point.symmetry[1].score,
                point.symmetry_broken ? "  (BROKEN)" : "");
  }
  if (point.ok()) {
    std::printf("N_auto            %d\n", point.N_auto);
    std::printf("D                 %.17g\n", point.D);
    std::printf("K                 %.17g\n", point.K);
    std::printf("K_star            %.17g\n", point.oracle.K_star);
    std::printf("rel_drift_err     %.3e  (%s)\n", point.rel_drift_err, point.drift_ok ? "ok" : "above threshold");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective drift/diffusion coefficients of kinetic Fokker-Planck operators"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key=value configuration file (flags override)")
      ->check(CLI::ExistingFile);

  RunConfig config;
  std::string case_name, rule, solver;

  CLI::App* single = app.add_subcommand("single", "run one parameter point end to end");
  add_common_options(single, config, case_name, rule, solver);

  CLI::App* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  add_common_options(sweep, config, case_name, rule, solver);
  std::string sweep_param;
  std::vector<double> sweep_values;
  sweep->add_option("--param", sweep_param, "swept parameter: gamma, delta or theta");
  sweep->add_option("--values", sweep_values, "sweep values")->delimiter(',');

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "print the reference drift coefficient");
  add_common_options(oracle_cmd, config, case_name, rule, solver);

  CLI::App* eigs = app.add_subcommand("eigs", "compute and export the lowest eigenpairs only");
  add_common_options(eigs, config, case_name, rule, solver);

  try {
    app.parse(argc, argv);
    if (!config_path.empty()) {
      // Flags must override the document: reload the document as the base and
      // re-parse the command line on top of it.
      config = fpspectral::load_config_file(config_path, RunConfig{});
      case_name.clear();
      rule.clear();
      solver.clear();
      CLI::App reparse{""};
      reparse.require_subcommand(1);
      std::string ignored;
      reparse.add_option("--config", ignored);
      CLI::App* s1 = reparse.add_subcommand("single", "");
      add_common_options(s1, config, case_name, rule, solver);
      CLI::App* s2 = reparse.add_subcommand("sweep", "");
      add_common_options(s2, config, case_name, rule, solver);
      s2->add_option("--param", sweep_param);
      s2->add_option("--values", sweep_values)->delimiter(',');
      CLI::App* s3 = reparse.add_subcommand("oracle", "");
      add_common_options(s3, config, case_name, rule, solver);
      CLI::App* s4 = reparse.add_subcommand("eigs", "");
      add_common_options(s4, config, case_name, rule, solver);
      reparse.parse(argc, argv);
    }
    finalize_config(config, case_name, rule, solver);

    if (single->parsed()) {
      fpspectral::PointResult point = fpspectral::run_single(config);
      print_point(point);
      return 0;
    }

    if (sweep->parsed()) {
      if (!sweep_param.empty()) config.sweep_param = sweep_param;
      if (!sweep_values.empty()) config.sweep_values = sweep_values;
      fpspectral::SweepResult result = fpspectral::run_sweep(config);
      int n_ok = 0;
      for (const auto& p : result.points) n_ok += p.ok() ? 1 : 0;
      std::printf("sweep %s over %zu values: %d ok, %zu flagged; outputs in %s\n",
                  result.param.c_str(), result.values.size(), n_ok, result.points.size() - n_ok,
                  config.output_dir.c_str());
      for (const auto& p : result.points) {
        std::printf("  %s=%-10g status=%-20s D=%-14.8g K=%-14.8g rel_err=%.3e\n", result.param.c_str(),
                    p.sweep_value, p.status.c_str(), p.D, p.K, p.rel_drift_err);
      }
      return 0;
    }

    if (oracle_cmd->parsed()) {
      fpspectral::validate_config(config);
      const fpspectral::PotentialSpec spec = fpspectral::potential_from_config(config);
      const fpspectral::OracleResult result =
          fpspectral::drift_oracle(spec, config.quad_points, config.quad_panels);
      std::printf("potential         %s\n", spec.describe().c_str());
      std::printf("V                 %.17g\n", spec.V);
      std::printf("Z                 %.17g\n", spec.Z);
      std::printf("K_star            %.17g\n", result.K_star);
      std::printf("K_star_rectangle  %.17g\n", result.K_star_rect);
      std::printf("quad_error        %.3e\n", result.quad_error_estimate);
      return 0;
    }

    if (eigs->parsed()) {
      fpspectral::validate_config(config);
      RunConfig eig_config = config;
      eig_config.dump_eigenfunctions = config.dump_eigenfunctions;
      const fpspectral::PotentialSpec spec = fpspectral::potential_from_config(eig_config);
      const fpspectral::Mesh mesh = fpspectral::build_mesh(eig_config.R, eig_config.n_elements,
                                                           eig_config.degree, eig_config.quad_degree);
      const fpspectral::DiscreteOperator op = fpspectral::assemble(mesh, spec);
      const int count = std::min(eig_config.N_max + 1, op.dim());
      fpspectral::SpectralDecomposition dec =
          fpspectral::lowest_eigenpairs(op, count, eig_config.solver_tol, eig_config.solver);
      std::string csv = "index,lambda\n";
      for (int i = 0; i < dec.count(); ++i) {
        csv += std::to_string(i) + "," + fpspectral::format_g17(dec.eigenvalues[i]) + "\n";
      }
      fpspectral::write_file_atomic(std::filesystem::path(eig_config.output_dir) / "eigenvalues.csv",
                                    csv);
      if (eig_config.dump_eigenfunctions) {
        std::string fcsv = "index,lambda";
        for (int i = 0; i < mesh.n_nodes(); ++i) fcsv += "," + fpspectral::format_g17(mesh.nodes[i]);
        fcsv += "\n";
        for (int k = 0; k < dec.count(); ++k) {
          fcsv += std::to_string(k) + "," + fpspectral::format_g17(dec.eigenvalues[k]) + "," +
                  fpspectral::format_g17(0.0);
          for (double c : dec.eigenvectors[k]) fcsv += "," + fpspectral::format_g17(c);
          fcsv += "," + fpspectral::format_g17(0.0) + "\n";
        }
        fpspectral::write_file_atomic(
            std::filesystem::path(eig_config.output_dir) / "eigenfunctions.csv", fcsv);
      }
      if (eig_config.dump_operators) {
        std::ostringstream a_txt, b_txt;
        fpspectral::dump_operator(op, a_txt, b_txt);
        fpspectral::write_file_atomic(std::filesystem::path(eig_config.output_dir) / "A.txt", a_txt.str());
        fpspectral::write_file_atomic(std::filesystem::path(eig_config.output_dir) / "B.txt", b_txt.str());
      }
      std::printf("lambda_0..4      ");
      for (int i = 0; i < dec.count() && i < 5; ++i) std::printf(" %.10g", dec.eigenvalues[i]);
      std::printf("\n");
      try {
        fpspectral::identify_zero_mode(dec, eig_config.tol_zero);
        std::printf("zero mode         index %d, gap %.10g\n", *dec.zero_mode, dec.gap);
      } catch (const fpspectral::TunnellingCollapse& e) {
        std::printf("zero mode         collapsed (%s)\n", e.what());
      }
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(fpspectral::ExitCode::bad_parameter);
  } catch (const fpspectral::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
