#include "fpspectral/run.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <limits>
#include <sstream>

#include "fpspectral/csvio.hpp"
#include "fpspectral/errors.hpp"
#include "fpspectral/operators.hpp"
#include "fpspectral/svg.hpp"

namespace fpspectral {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string status_of(const Error& e) {
  switch (e.exit_code()) {
    case ExitCode::bad_parameter: return "bad_parameter";
    case ExitCode::tunnelling_collapse: return "tunnelling_collapse";
    case ExitCode::no_convergence: return "no_convergence";
    case ExitCode::io_failure: return "io_failure";
    default: return "error";
  }
}

// Pipeline state shared between run_point and the dump writers.
struct PipelineData {
  Mesh mesh;
  DiscreteOperator op;
  SpectralDecomposition dec;
  bool have_op = false;
  bool have_dec = false;
};

PointResult run_point_impl(const RunConfig& config, std::optional<double> sweep_value,
                           PipelineData* data) {
  PointResult out;
  out.sweep_value = sweep_value.value_or(kNaN);
  out.gamma = config.gamma;
  out.theta = config.theta;
  out.delta = config.case_name == RunConfig::Case::C || config.case_name == RunConfig::Case::custom
                  ? config.delta
                  : 0.0;
  if (sweep_value) {
    if (config.sweep_param == "gamma") out.gamma = *sweep_value;
    if (config.sweep_param == "delta") out.delta = *sweep_value;
    if (config.sweep_param == "theta") out.theta = *sweep_value;
  }
  out.D = out.K = out.rel_drift_err = kNaN;
  out.gap = kNaN;
  out.oracle.K_star = out.oracle.K_star_rect = out.oracle.quad_error_estimate = kNaN;

  try {
    validate_config(config);
    const PotentialSpec spec = potential_from_config(config, sweep_value);
    out.Z = spec.Z;
    out.V = spec.V;
    out.vartheta = spec.vartheta;

    Mesh mesh = build_mesh(config.R, config.n_elements, config.degree, config.quad_degree);
    DiscreteOperator op = assemble(mesh, spec);
    if (data) {
      data->mesh = mesh;
      data->op = op;
      data->have_op = true;
    }

    const int count = std::min(config.N_max + 1, op.dim());
    SpectralDecomposition dec = lowest_eigenpairs(op, count, config.solver_tol, config.solver);
    out.eigenvalues = dec.eigenvalues;

    if (spec.symmetric()) {
      out.symmetry = symmetry_diagnostic(dec, mesh, spec, config.s_tol);
      out.symmetry_broken = out.symmetry[0].broken || out.symmetry[1].broken;
    }

    if (data) {
      data->dec = dec;
      data->have_dec = true;
    }

    identify_zero_mode(dec, config.tol_zero);
    out.gap = dec.gap;
    if (data) data->dec = dec;

    const FourierCoefficients fc = fourier_coefficients(dec, spec, mesh, config.fourier_rule);
    out.series = truncated_coefficients(dec, fc.eta, fc.omega, fc.size());
    out.N_auto = auto_truncate(out.series, config.rel_tol);
    out.D = out.series.D(out.N_auto);
    out.K = out.series.K(out.N_auto);

    out.oracle = drift_oracle(spec, config.quad_points, config.quad_panels);
    out.rel_drift_err = std::abs(out.K - out.oracle.K_star) / out.oracle.K_star;
    out.drift_ok = out.rel_drift_err < config.oracle_tol;
  } catch (const Error& e) {
    out.status = status_of(e);
    out.message = e.what();
  }
  return out;
}

void rethrow_point_error(const PointResult& point) {
  if (point.status == "bad_parameter") throw BadParameter(point.message);
  if (point.status == "tunnelling_collapse") throw TunnellingCollapse(point.message);
  if (point.status == "no_convergence") throw NoConvergence(point.message);
  if (point.status == "io_failure") throw IoFailure(point.message);
}

}  // namespace

PointResult run_point(const RunConfig& config, std::optional<double> sweep_value) {
  return run_point_impl(config, sweep_value, nullptr);
}

std::string eigenvalues_csv(const PointResult& point) {
  std::string csv = "index,lambda\n";
  for (std::size_t i = 0; i < point.eigenvalues.size(); ++i) {
    csv += csv_row({std::to_string(i), format_g17(point.eigenvalues[i])});
  }
  return csv;
}

std::string series_csv(const PointResult& point) {
  std::string csv = "n,lambda_n,eta_n,omega_n,D_partial,K_partial\n";
  for (int n = 1; n <= point.series.size(); ++n) {
    csv += csv_row({std::to_string(n), format_g17(point.series.lambda[n - 1]),
                    format_g17(point.series.eta[n - 1]), format_g17(point.series.omega[n - 1]),
                    format_g17(point.series.D_partial[n - 1]), format_g17(point.series.K_partial[n - 1])});
  }
  return csv;
}

std::string summary_csv(const RunConfig& config, const PointResult& point) {
  std::string csv =
      "case,gamma,theta,delta,vartheta,Z,V,R,n_elements,degree,quad_degree,lambda_0,gap,N_auto,D,K,"
      "K_star,K_star_rect,oracle_quad_error,rel_drift_err,drift_ok,sym_score_0,sym_score_1,"
      "symmetry_broken,status\n";
  const double lambda0 = point.eigenvalues.empty() ? kNaN : point.eigenvalues[0];
  const double s0 = point.symmetry.size() > 0 ? point.symmetry[0].score : kNaN;
  const double s1 = point.symmetry.size() > 1 ? point.symmetry[1].score : kNaN;
  csv += csv_row({case_to_string(config.case_name), format_g17(point.gamma), format_g17(point.theta),
                  format_g17(point.delta), format_g17(point.vartheta), format_g17(point.Z),
                  format_g17(point.V), format_g17(config.R), std::to_string(config.n_elements),
                  std::to_string(config.degree), std::to_string(config.quad_degree),
                  format_g17(lambda0), format_g17(point.gap), std::to_string(point.N_auto),
                  format_g17(point.D), format_g17(point.K), format_g17(point.oracle.K_star),
                  format_g17(point.oracle.K_star_rect), format_g17(point.oracle.quad_error_estimate),
                  format_g17(point.rel_drift_err), point.drift_ok ? "1" : "0", format_g17(s0),
                  format_g17(s1), point.symmetry_broken ? "1" : "0", point.status});
  return csv;
}

std::string sweep_csv(const SweepResult& sweep) {
  std::string csv =
      "param,value,lambda_1,lambda_2,lambda_3,lambda_4,lambda_5,D,K,K_star,rel_err,V,"
      "symmetry_broken,status\n";
  for (const auto& p : sweep.points) {
    auto lam = [&](std::size_t j) {
      return j < p.eigenvalues.size() ? format_g17(p.eigenvalues[j]) : format_g17(kNaN);
    };
    csv += csv_row({sweep.param, format_g17(p.sweep_value), lam(1), lam(2), lam(3), lam(4), lam(5),
                    format_g17(p.D), format_g17(p.K), format_g17(p.oracle.K_star),
                    format_g17(p.rel_drift_err), format_g17(p.V), p.symmetry_broken ? "1" : "0",
                    p.status});
  }
  return csv;
}

PointResult run_single(const RunConfig& config) {
  validate_config(config);
  if (config.has_sweep()) throw BadParameter("run_single: config has a sweep; use run_sweep");

  PipelineData data;
  PointResult point = run_point_impl(config, {}, &data);

  const std::filesystem::path dir(config.output_dir);
  if (!point.eigenvalues.empty()) write_file_atomic(dir / "eigenvalues.csv", eigenvalues_csv(point));
  if (point.series.size() > 0) write_file_atomic(dir / "series.csv", series_csv(point));
  write_file_atomic(dir / "summary.csv", summary_csv(config, point));
  if (config.dump_eigenfunctions && data.have_dec) {
    std::string csv = "index,lambda";
    for (int i = 0; i < data.mesh.n_nodes(); ++i) csv += "," + format_g17(data.mesh.nodes[i]);
    csv += "\n";
    for (int k = 0; k < data.dec.count(); ++k) {
      csv += std::to_string(k) + "," + format_g17(data.dec.eigenvalues[k]);
      csv += "," + format_g17(0.0);
      for (double c : data.dec.eigenvectors[k]) csv += "," + format_g17(c);
      csv += "," + format_g17(0.0) + "\n";
    }
    write_file_atomic(dir / "eigenfunctions.csv", csv);
  }
  if (config.dump_operators && data.have_op) {
    std::ostringstream a_txt, b_txt;
    dump_operator(data.op, a_txt, b_txt);
    write_file_atomic(dir / "A.txt", a_txt.str());
    write_file_atomic(dir / "B.txt", b_txt.str());
  }

  rethrow_point_error(point);
  return point;
}

SweepResult run_sweep(const RunConfig& config) {
  validate_config(config);
  if (!config.has_sweep()) throw BadParameter("run_sweep: config has no sweep");

  SweepResult sweep;
  sweep.param = config.sweep_param;
  sweep.values = config.sweep_values;
  sweep.points.resize(config.sweep_values.size());

  std::vector<std::future<PointResult>> futures;
  futures.reserve(config.sweep_values.size());
  for (double value : config.sweep_values) {
    futures.push_back(
        std::async(std::launch::async, [&config, value] { return run_point(config, value); }));
  }
  for (std::size_t i = 0; i < futures.size(); ++i) sweep.points[i] = futures[i].get();

  const std::filesystem::path dir(config.output_dir);
  write_file_atomic(dir / "sweep.csv", sweep_csv(sweep));
  emit_plots(sweep, config.output_dir, config.formats);
  return sweep;
}

std::vector<std::string> emit_plots(const SweepResult& sweep, const std::string& output_dir,
                                    const std::vector<std::string>& formats) {
  for (const auto& f : formats) {
    if (f != "csv" && f != "svg") throw BadParameter("emit_plots: unknown output format '" + f + "'");
  }
  std::vector<std::string> written;
  if (std::find(formats.begin(), formats.end(), "svg") == formats.end()) return written;

  const std::filesystem::path dir(output_dir);
  auto log10_of = [](double v) { return v > 0.0 ? std::log10(v) : kNaN; };

  // lambda_j vs parameter, linear and log-log
  {
    std::vector<PlotSeries> lin(5), loglog(5);
    for (int j = 0; j < 5; ++j) {
      lin[j].label = "lambda_" + std::to_string(j + 1);
      loglog[j].label = "log10 lambda_" + std::to_string(j + 1);
      for (const auto& p : sweep.points) {
        const double lam =
            static_cast<std::size_t>(j + 1) < p.eigenvalues.size() ? p.eigenvalues[j + 1] : kNaN;
        lin[j].x.push_back(p.sweep_value);
        lin[j].y.push_back(lam);
        loglog[j].x.push_back(log10_of(p.sweep_value));
        loglog[j].y.push_back(log10_of(lam));
      }
    }
    write_file_atomic(dir / "lambda.svg",
                      render_line_plot("lowest positive eigenvalues", sweep.param, "lambda_j", lin));
    written.push_back("lambda.svg");
    write_file_atomic(dir / "lambda_log10.svg",
                      render_line_plot("lowest positive eigenvalues (log-log)", "log10 " + sweep.param,
                                       "log10 lambda_j", loglog));
    written.push_back("lambda_log10.svg");
  }

  struct Quantity {
    const char* file;
    const char* title;
    double PointResult::*field;
  };
  const Quantity quantities[] = {
      {"D", "diffusion coefficient", &PointResult::D},
      {"K", "drift coefficient", &PointResult::K},
      {"drift_rel_err", "relative drift error vs oracle", &PointResult::rel_drift_err},
  };
  for (const auto& q : quantities) {
    PlotSeries lin{q.file, {}, {}}, log{std::string("log10 ") + q.file, {}, {}};
    for (const auto& p : sweep.points) {
      lin.x.push_back(p.sweep_value);
      lin.y.push_back(p.*(q.field));
      log.x.push_back(p.sweep_value);
      log.y.push_back(log10_of(p.*(q.field)));
    }
    write_file_atomic(dir / (std::string(q.file) + ".svg"),
                      render_line_plot(q.title, sweep.param, q.file, {lin}));
    written.push_back(std::string(q.file) + ".svg");
    write_file_atomic(dir / (std::string(q.file) + "_log10.svg"),
                      render_line_plot(std::string(q.title) + " (log10)", sweep.param,
                                       std::string("log10 ") + q.file, {log}));
    written.push_back(std::string(q.file) + "_log10.svg");
  }
  return written;
}

}  // namespace fpspectral
