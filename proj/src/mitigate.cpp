#include "nuq/mitigate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "nuq/errors.hpp"

namespace nuq::mitigate {

namespace {

double quantile(std::vector<double> v, double q) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

PlEstimate estimate_pL(double pi_c, std::size_t d) {
  if (d < 2) throw DomainError("estimate_pL: D must be >= 2");
  const double dd = static_cast<double>(d);
  const double p = dd / (dd - 1.0) * (1.0 - pi_c);
  PlEstimate e;
  e.p = std::clamp(p, 0.0, 1.0);
  e.clipped = e.p != p;
  return e;
}

double CalibrationFit::predict(double depth) const { return s * std::pow(f, depth_scale * depth); }

double CalibrationFit::predict_err(double depth) const {
  const double x = depth_scale * depth;
  const double vs = s > 0 ? (s_err / s) * (s_err / s) : 0.0;
  const double vf = f > 0 ? (f_err / f) * (f_err / f) : 0.0;
  const double var_log = vs + x * x * vf + 2.0 * x * cov_log;
  return predict(depth) * std::sqrt(std::max(0.0, var_log));
}

CalibrationFit fit_exponential(const std::vector<double>& depths, const std::vector<double>& values,
                               const std::vector<double>& weights, double depth_scale) {
  if (depths.size() != values.size()) throw DomainError("fit_exponential: depths and values differ in length");
  if (!weights.empty() && weights.size() != values.size())
    throw DomainError("fit_exponential: weights and values differ in length");
  if (!(depth_scale > 0.0)) throw DomainError("fit_exponential: depth scale must be > 0");

  CalibrationFit fit;
  fit.depth_scale = depth_scale;
  fit.depths = depths;
  fit.values = values;
  fit.used.assign(values.size(), false);
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> xs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      fit.excluded_nonpositive = true;
      continue;
    }
    const double w = weights.empty() ? 1.0 : weights[i];
    if (!(w > 0.0)) continue;
    fit.used[i] = true;
    const double x = depth_scale * depths[i];
    const double y = std::log(values[i]);
    sw += w;
    sx += w * x;
    sy += w * y;
    sxx += w * x * x;
    sxy += w * x * y;
    xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw NumericError("fit_exponential: fewer than 2 usable distinct depths");

  const double det = sw * sxx - sx * sx;
  const double ln_f = (sw * sxy - sx * sy) / det;
  const double ln_s = (sy - ln_f * sx) / sw;
  double var_s = sxx / det, var_f = sw / det, cov = -sx / det;

  double chi2 = 0.0;
  std::size_t used = 0;
  fit.residuals.assign(values.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!fit.used[i]) continue;
    const double r = std::log(values[i]) - (ln_s + ln_f * depth_scale * depths[i]);
    fit.residuals[i] = r;
    chi2 += (weights.empty() ? 1.0 : weights[i]) * r * r;
    ++used;
  }
  if (weights.empty()) {
    const double scale = used > 2 ? chi2 / static_cast<double>(used - 2) : 0.0;
    var_s *= scale;
    var_f *= scale;
    cov *= scale;
  }

  fit.s = std::exp(ln_s);
  fit.f = std::exp(ln_f);
  if (fit.s > 1.0 || fit.f > 1.0) {
    fit.clipped = true;
    fit.s = std::min(fit.s, 1.0);
    fit.f = std::min(fit.f, 1.0);
  }
  fit.s_err = fit.s * std::sqrt(std::max(0.0, var_s));
  fit.f_err = fit.f * std::sqrt(std::max(0.0, var_f));
  fit.cov_log = cov;
  return fit;
}

double mitigate_projector(double bare, double pl, std::size_t d) {
  if (!(pl >= 0.0 && pl <= 1.0)) throw DomainError("mitigate_projector: pL outside [0, 1]");
  if (pl >= 1.0) throw NumericError("mitigate_projector: pL = 1, the state is fully depolarized");
  return (bare - pl / static_cast<double>(d)) / (1.0 - pl);
}

double mitigate_projector_qubit(double bare, double pi_c) {
  const double den = 16.0 * pi_c - 1.0;
  if (den <= 0.0) throw NumericError("mitigate_projector_qubit: <Pi_c> <= 1/16");
  return (15.0 * bare + pi_c - 1.0) / den;
}

double mitigated_error(double bare, double sigma_bare, double pl, double sigma_pl, std::size_t d) {
  const double a = sigma_bare / (1.0 - pl);
  const double b = (bare - 1.0 / static_cast<double>(d)) / ((1.0 - pl) * (1.0 - pl)) * sigma_pl;
  return std::sqrt(a * a + b * b);
}

Tvd tvd(const std::vector<double>& p_ref, const std::vector<double>& p_meas) {
  if (p_ref.size() != p_meas.size()) throw DomainError("tvd: distributions have different support sizes");
  Tvd t;
  double pos = 0.0;
  for (double x : p_meas) pos += std::max(0.0, x);
  for (std::size_t i = 0; i < p_ref.size(); ++i) {
    t.raw += 0.5 * std::abs(p_ref[i] - p_meas[i]);
    const double c = pos > 0.0 ? std::max(0.0, p_meas[i]) / pos : 0.0;
    t.clipped += 0.5 * std::abs(p_ref[i] - c);
  }
  return t;
}

qcir::Circuit calibration_circuit(int layers, const Encoding& enc, const qcir::Connectivity& conn,
                                  const Mixing& m, qcir::PmnsFlavor flavor) {
  if (layers < 0) throw DomainError("calibration_circuit: L must be >= 0");
  const auto plan = TrotterPlan::lexicographic(enc.n, 1.0, layers);
  qcir::Circuit c = qcir::register_circuit(enc, "calibration");
  qcir::append_preparation(c, enc, m, flavor);
  for (int l = 0; l < layers; ++l) qcir::append_clifford_layer(c, enc, plan, conn);
  qcir::append_measurement_basis(c, enc, m, flavor);
  return c;
}

Options Options::for_encoding(EncodingKind k) {
  Options o;
  o.source = k == EncodingKind::Qutrit ? PlSource::Fit : PlSource::Direct;
  return o;
}

Table mitigate_run(const sim::RunSpec& spec, const sim::NoisyRun& run, const sim::CalibrationRun& cal,
                   const ProbabilityTable& exact, const ProbabilityTable& trotter, const Options& opt) {
  const std::size_t nsteps = run.steps.size();
  if (cal.run.steps.size() != nsteps) throw DomainError("mitigate_run: calibration depths do not match the run");
  if (static_cast<std::size_t>(exact.probs.rows()) != nsteps || static_cast<std::size_t>(trotter.probs.rows()) != nsteps)
    throw DomainError("mitigate_run: reference tables do not match the run");
  const std::size_t d = run.dim;
  const double dd = static_cast<double>(d);
  const int n = spec.enc.n;
  const auto nl = static_cast<std::size_t>(exact.probs.cols());

  Table out;
  out.dim = d;
  if (opt.source == PlSource::Fit) {
    std::vector<double> depths, values, weights;
    for (std::size_t l = 0; l < nsteps; ++l) {
      double v = cal.pi_c_measured[l];
      double e = cal.pi_c_err[l];
      if (opt.fit_target == FitTarget::Normalized) {
        v = (v - 1.0 / dd) / (1.0 - 1.0 / dd);
        e /= (1.0 - 1.0 / dd);
      }
      // a point measured at exactly 0 or 1 has zero binomial error
      const double floor = 1.0 / static_cast<double>(std::max<std::int64_t>(1, cal.run.steps[l].counts.shots));
      e = std::max(e, floor);
      depths.push_back(static_cast<double>(run.steps[l].step));
      values.push_back(v);
      weights.push_back(v > 0.0 ? (v / e) * (v / e) : 0.0);
    }
    out.fit = fit_exponential(depths, values, weights, opt.depth_scale);
    out.have_fit = true;
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t l = 0; l < nsteps; ++l) {
    const auto& st = run.steps[l];
    StepSummary sum;
    sum.step = st.step;
    sum.time = st.time;
    sum.pi_c = cal.pi_c_measured[l];
    sum.pi_c_err = cal.pi_c_err[l];
    if (opt.source == PlSource::Direct) {
      const auto e = estimate_pL(sum.pi_c, d);
      sum.pl = e.p;
      sum.pl_clipped = e.clipped;
      sum.pl_err = dd / (dd - 1.0) * sum.pi_c_err;
    } else {
      double pred = out.fit.predict(st.step);
      double pred_err = out.fit.predict_err(st.step);
      if (opt.fit_target == FitTarget::Normalized) {
        pred = 1.0 / dd + (1.0 - 1.0 / dd) * pred;
        pred_err *= (1.0 - 1.0 / dd);
      }
      const auto e = estimate_pL(pred, d);
      sum.pl = e.p;
      sum.pl_clipped = e.clipped;
      sum.pl_err = dd / (dd - 1.0) * pred_err;
    }
    sum.leak = st.counts.shots ? static_cast<double>(st.counts.leak()) / static_cast<double>(st.counts.shots) : 0.0;

    const bool can_mitigate = sum.pl < 1.0;
    std::vector<double> ref(nl), bare(nl), bare_err(nl), mit(nl);
    for (std::size_t k = 0; k < nl; ++k) {
      Row r;
      r.step = st.step;
      r.time = st.time;
      r.label = flavor_label(k, n);
      r.p_exact = exact.probs(l, k);
      r.p_trotter = trotter.probs(l, k);
      r.p_bare = st.counts.frequency(r.label);
      r.p_bare_err = st.counts.std_error(r.label);
      if (can_mitigate) {
        r.p_mit = mitigate_projector(r.p_bare, sum.pl, d);
        r.p_mit_err = mitigated_error(r.p_bare, r.p_bare_err, sum.pl, sum.pl_err, d);
      } else {
        r.p_mit = r.p_mit_err = std::numeric_limits<double>::quiet_NaN();
      }
      ref[k] = r.p_trotter;
      bare[k] = r.p_bare;
      bare_err[k] = r.p_bare_err;
      mit[k] = r.p_mit;
      out.rows.push_back(std::move(r));
    }
    sum.tvd_bare = tvd(ref, bare);
    if (can_mitigate) sum.tvd_mit = tvd(ref, mit);
    else sum.tvd_mit.raw = sum.tvd_mit.clipped = std::numeric_limits<double>::quiet_NaN();

    if (opt.bootstrap > 0) {
      std::mt19937_64 rng(sim::derive_seed(opt.seed, 3, static_cast<std::uint64_t>(l)));
      std::vector<double> tb, tm;
      std::vector<double> b(nl), m(nl);
      for (int rep = 0; rep < opt.bootstrap; ++rep) {
        const double p = std::clamp(sum.pl + sum.pl_err * gauss(rng), 0.0, 1.0 - 1e-12);
        for (std::size_t k = 0; k < nl; ++k) {
          b[k] = bare[k] + bare_err[k] * gauss(rng);
          m[k] = (b[k] - p / dd) / (1.0 - p);
        }
        tb.push_back(tvd(ref, b).raw);
        tm.push_back(tvd(ref, m).raw);
      }
      const double lo = 0.5 * (1.0 - opt.band), hi = 1.0 - lo;
      sum.band_bare_lo = quantile(tb, lo);
      sum.band_bare_hi = quantile(tb, hi);
      sum.band_mit_lo = can_mitigate ? quantile(tm, lo) : std::numeric_limits<double>::quiet_NaN();
      sum.band_mit_hi = can_mitigate ? quantile(tm, hi) : std::numeric_limits<double>::quiet_NaN();
    }
    out.steps.push_back(sum);
  }
  return out;
}

}  // namespace nuq::mitigate
