#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nuq/sim/noisy_run.hpp"

namespace nuq::mitigate {

struct PlEstimate {
  double p = 0.0;
  bool clipped = false;
};

/// p_L = D/(D-1) (1 - <Pi_c>), clipped to [0, 1].
PlEstimate estimate_pL(double pi_c, std::size_t d);

struct CalibrationFit {
  double s = 1.0;
  double f = 1.0;
  double s_err = 0.0;
  double f_err = 0.0;
  double cov_log = 0.0;  // covariance of (ln s, ln F)
  double depth_scale = 1.0;
  std::vector<double> depths;
  std::vector<double> values;
  std::vector<double> residuals;  // ln value - ln(s F^L), NaN for excluded points
  std::vector<bool> used;
  bool excluded_nonpositive = false;
  bool clipped = false;  // s or F pushed back into (0, 1]

  /// s F^(scale L)
  double predict(double depth) const;
  /// Standard error of predict(depth) from the log-space covariance.
  double predict_err(double depth) const;
};

/// Weighted least squares of ln v = ln s + (scale L) ln F. Non-empty weights
/// are inverse variances of ln v; with no weights the covariance is scaled by
/// the residual variance.
CalibrationFit fit_exponential(const std::vector<double>& depths, const std::vector<double>& values,
                               const std::vector<double>& weights = {}, double depth_scale = 1.0);

/// (bare - pL/D) / (1 - pL); throws NumericError at pL = 1.
double mitigate_projector(double bare, double pl, std::size_t d);
/// Four-qubit closed form (15 bare + Pi_c - 1) / (16 Pi_c - 1).
double mitigate_projector_qubit(double bare, double pi_c);
/// First-order propagation of sigma_bare and sigma_pL.
double mitigated_error(double bare, double sigma_bare, double pl, double sigma_pl, std::size_t d);

struct Tvd {
  double raw = 0.0;
  double clipped = 0.0;
};

/// (1/2) sum |p_ref - p_meas|, raw and with p_meas clipped at 0 and renormalized.
Tvd tvd(const std::vector<double>& p_ref, const std::vector<double>& p_meas);

/// Clifford skeleton of L Trotter layers between the basis changes.
qcir::Circuit calibration_circuit(int layers, const Encoding& enc, const qcir::Connectivity& conn,
                                  const Mixing& m, qcir::PmnsFlavor flavor = qcir::PmnsFlavor::Cnot);

enum class PlSource { Direct, Fit };
enum class FitTarget { Raw, Normalized };

struct Options {
  PlSource source = PlSource::Direct;
  /// Raw fits s F^L to <Pi_c>; Normalized fits it to (<Pi_c> - 1/D)/(1 - 1/D),
  /// which is exactly exponential under layer-global depolarizing noise.
  FitTarget fit_target = FitTarget::Raw;
  double depth_scale = 1.0;
  int bootstrap = 1000;
  double band = 0.90;
  std::uint64_t seed = 0;

  /// Default split: qubits use the calibration values directly, qutrits the fit.
  static Options for_encoding(EncodingKind k);
};

struct Row {
  int step = 0;
  double time = 0.0;
  std::string label;
  double p_exact = 0, p_trotter = 0, p_bare = 0, p_bare_err = 0, p_mit = 0, p_mit_err = 0;
};

struct StepSummary {
  int step = 0;
  double time = 0.0;
  double pi_c = 0.0, pi_c_err = 0.0;
  double pl = 0.0, pl_err = 0.0;
  bool pl_clipped = false;
  double leak = 0.0;
  Tvd tvd_bare, tvd_mit;
  double band_bare_lo = 0, band_bare_hi = 0, band_mit_lo = 0, band_mit_hi = 0;
};

struct Table {
  std::size_t dim = 0;
  std::vector<Row> rows;  // step-major, labels in 3^N order
  std::vector<StepSummary> steps;
  CalibrationFit fit;
  bool have_fit = false;
};

/// Full post-processing: p_L per depth, mitigated projectors for every
/// flavor label, TVD against the ideal Trotter distribution, bootstrap bands.
Table mitigate_run(const sim::RunSpec& spec, const sim::NoisyRun& run, const sim::CalibrationRun& cal,
                   const ProbabilityTable& exact, const ProbabilityTable& trotter, const Options& opt);

}  // namespace nuq::mitigate
