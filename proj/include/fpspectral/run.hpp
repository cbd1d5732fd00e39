#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpspectral/coefficients.hpp"
#include "fpspectral/config.hpp"
#include "fpspectral/oracle.hpp"

namespace fpspectral {

// Outcome of the full pipeline (potential -> mesh -> operator -> eigenpairs
// -> Fourier coefficients -> truncated sums -> oracle comparison) for one
// parameter point.
struct PointResult {
  double sweep_value = 0.0;
  double gamma = 0.0, theta = 0.0, delta = 0.0;

  std::string status = "ok";  // ok | tunnelling_collapse | bad_parameter | no_convergence | io_failure
  std::string message;

  double Z = 0.0, V = 0.0, vartheta = 0.0;
  std::vector<double> eigenvalues;
  double gap = 0.0;
  std::vector<AsymmetryScore> symmetry;  // first two eigenfunctions, symmetric cases only
  bool symmetry_broken = false;

  CoefficientSeries series;
  int N_auto = 0;
  double D = 0.0, K = 0.0;

  OracleResult oracle;
  double rel_drift_err = 0.0;
  bool drift_ok = false;

  bool ok() const { return status == "ok"; }
};

struct SweepResult {
  std::string param;
  std::vector<double> values;
  std::vector<PointResult> points;
};

// Runs one point without touching the filesystem. Never throws for numerical
// failures: the status/message fields record them (sweeps must continue past
// collapsed points).
PointResult run_point(const RunConfig& config, std::optional<double> sweep_value = {});

// Full single run: executes the pipeline and writes eigenvalues.csv,
// series.csv and summary.csv (plus optional eigenfunction and operator
// dumps) into config.output_dir. File writes are atomic. Throws the
// pipeline's error (mapped to its exit code by the CLI) after writing
// whatever complete artifacts exist; summary.csv is always written.
PointResult run_single(const RunConfig& config);

// Sweep driver: all points run concurrently, results merged in sweep order;
// writes sweep.csv and, when "svg" is among the formats, the plot files.
SweepResult run_sweep(const RunConfig& config);

// Plot emission for a sweep (one linear and one log10 variant per quantity).
// Returns the written file names.
std::vector<std::string> emit_plots(const SweepResult& sweep, const std::string& output_dir,
                                    const std::vector<std::string>& formats);

// CSV renderers (exposed for tests; run_single/run_sweep use them).
std::string eigenvalues_csv(const PointResult& point);
std::string series_csv(const PointResult& point);
std::string summary_csv(const RunConfig& config, const PointResult& point);
std::string sweep_csv(const SweepResult& sweep);

}  // namespace fpspectral
