#pragma once

// Independent verification engines: an embedded Dormand-Prince 5(4)
// integrator for the classical mode equation eps'' + gamma(t) eps = 0, and
// an adaptive Gauss-Kronrod quadrature.  These are deliberately kept free
// of any Bessel/gamma machinery so they can serve as oracles for the
// closed forms implemented elsewhere.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "invosc/errors.hpp"
#include "invosc/mode.hpp"
#include "invosc/scaled.hpp"

namespace invosc::oracle {

/// One dense-output sample of an integration run.  eps/eps_dot are
/// mantissas; true values are mantissa * exp(log_scale).
struct ModeSample {
  double t = 0.0;
  std::complex<double> eps;
  std::complex<double> eps_dot;
  double log_scale = 0.0;
};

struct IntegrationResult {
  std::vector<ModeSample> samples;        // strictly increasing in t
  double wronskian_drift = 0.0;           // max |W - 2i| where measurable
  long steps_taken = 0;
  long steps_rejected = 0;
  double tol_achieved = 0.0;              // the tolerance actually used
};

namespace detail {

struct State {
  std::complex<double> eps, eps_dot;
};

inline State axpy(const State& a, double h, const State& b) {
  return {a.eps + h * b.eps, a.eps_dot + h * b.eps_dot};
}

/// Dormand-Prince 5(4) coefficients (the DOPRI5 pair).
struct Dopri5 {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

}  // namespace detail

/// Integrates eps'' + gamma(t) eps = 0 from t = -tau (initial conditions
/// eps = omega0^{-1/2}, eps' = i omega0^{1/2}) up to t1, recording samples
/// at the requested times (all within [-tau, t1]).
///
/// Discontinuities of gamma (the sudden jump at t = 0) are declared as
/// breakpoints by default: the integrator stops and restarts exactly there.
/// The state is log-rescaled whenever |eps| exceeds 1e100 so the inverted
/// regime keeps full relative accuracy.
inline IntegrationResult integrate_mode(const FrequencyProfile& profile, double t0, double t1,
                                        double tol, const std::vector<double>& sample_times,
                                        bool declare_breakpoints = true) {
  if (!(tol >= 1e-13 && tol <= 1e-4))
    throw DomainError("integrate_mode: tol must lie in [1e-13, 1e-4]");
  const double tau = 1.0;
  if (t0 < -tau - 1e-15) throw DomainError("integrate_mode: t0 must be >= -tau");
  if (!(t1 > -tau)) throw DomainError("integrate_mode: t1 must exceed -tau");

  const double omega0 = initial_frequency(profile);
  detail::State y{{1.0 / std::sqrt(omega0), 0.0}, {0.0, std::sqrt(omega0)}};

  IntegrationResult out;
  out.tol_achieved = tol;

  std::vector<double> stops = sample_times;
  std::sort(stops.begin(), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  for (double s : stops)
    if (s < -tau - 1e-12 || s > t1 + 1e-12)
      throw DomainError("integrate_mode: sample time outside [-tau, t1]");
  if (declare_breakpoints && has_jump_at_zero(profile) && t1 > 0.0) {
    if (!std::binary_search(stops.begin(), stops.end(), 0.0)) {
      stops.push_back(0.0);
      std::sort(stops.begin(), stops.end());
    }
  }
  if (stops.empty() || stops.back() < t1) stops.push_back(t1);

  // Within the segment that ends at a declared jump, gamma is evaluated on
  // the left side even when a stage lands exactly on the breakpoint.
  bool pre_jump_segment = false;
  const auto rhs = [&](double t, const detail::State& s) -> detail::State {
    const double tt = (pre_jump_segment && t >= 0.0) ? -0.0 : t;
    return {s.eps_dot, -gamma_of_t(profile, tt) * s.eps};
  };

  double t = -tau;
  double log_scale = 0.0;
  double h = std::min(1e-3, (t1 + tau) / 10.0);
  double err_prev = 1.0;
  detail::State k1 = rhs(t, y);

  std::vector<double> sorted_samples = sample_times;
  std::sort(sorted_samples.begin(), sorted_samples.end());
  if (std::binary_search(sorted_samples.begin(), sorted_samples.end(), t))
    out.samples.push_back({t, y.eps, y.eps_dot, log_scale});

  for (double stop : stops) {
    if (stop <= t) continue;
    pre_jump_segment = declare_breakpoints && has_jump_at_zero(profile) && stop <= 0.0;
    k1 = rhs(t, y);
    while (t < stop) {
      const bool clamped = (stop - t) <= h;
      h = std::min(h, stop - t);
      if (h < 1e-14)
        throw ConvergenceError("integrate_mode: step underflow at t = " + std::to_string(t));

      using D = detail::Dopri5;
      const detail::State s2 = detail::axpy(y, h * D::a21, k1);
      const detail::State k2 = rhs(t + D::c2 * h, s2);
      detail::State s3 = y;
      s3.eps += h * (D::a31 * k1.eps + D::a32 * k2.eps);
      s3.eps_dot += h * (D::a31 * k1.eps_dot + D::a32 * k2.eps_dot);
      const detail::State k3 = rhs(t + D::c3 * h, s3);
      detail::State s4 = y;
      s4.eps += h * (D::a41 * k1.eps + D::a42 * k2.eps + D::a43 * k3.eps);
      s4.eps_dot += h * (D::a41 * k1.eps_dot + D::a42 * k2.eps_dot + D::a43 * k3.eps_dot);
      const detail::State k4 = rhs(t + D::c4 * h, s4);
      detail::State s5 = y;
      s5.eps += h * (D::a51 * k1.eps + D::a52 * k2.eps + D::a53 * k3.eps + D::a54 * k4.eps);
      s5.eps_dot += h * (D::a51 * k1.eps_dot + D::a52 * k2.eps_dot + D::a53 * k3.eps_dot +
                         D::a54 * k4.eps_dot);
      const detail::State k5 = rhs(t + D::c5 * h, s5);
      detail::State s6 = y;
      s6.eps += h * (D::a61 * k1.eps + D::a62 * k2.eps + D::a63 * k3.eps + D::a64 * k4.eps +
                     D::a65 * k5.eps);
      s6.eps_dot += h * (D::a61 * k1.eps_dot + D::a62 * k2.eps_dot + D::a63 * k3.eps_dot +
                         D::a64 * k4.eps_dot + D::a65 * k5.eps_dot);
      const detail::State k6 = rhs(t + h, s6);
      detail::State ynew = y;
      ynew.eps += h * (D::b1 * k1.eps + D::b3 * k3.eps + D::b4 * k4.eps + D::b5 * k5.eps +
                       D::b6 * k6.eps);
      ynew.eps_dot += h * (D::b1 * k1.eps_dot + D::b3 * k3.eps_dot + D::b4 * k4.eps_dot +
                           D::b5 * k5.eps_dot + D::b6 * k6.eps_dot);
      const detail::State k7 = rhs(t + h, ynew);  // FSAL stage

      const std::complex<double> err_eps =
          h * (D::e1 * k1.eps + D::e3 * k3.eps + D::e4 * k4.eps + D::e5 * k5.eps +
               D::e6 * k6.eps + D::e7 * k7.eps);
      const std::complex<double> err_dot =
          h * (D::e1 * k1.eps_dot + D::e3 * k3.eps_dot + D::e4 * k4.eps_dot +
               D::e5 * k5.eps_dot + D::e6 * k6.eps_dot + D::e7 * k7.eps_dot);

      const double sc_eps = tol + tol * std::max(std::abs(y.eps), std::abs(ynew.eps));
      const double sc_dot = tol + tol * std::max(std::abs(y.eps_dot), std::abs(ynew.eps_dot));
      const double err = std::sqrt(0.5 * (std::norm(err_eps) / (sc_eps * sc_eps) +
                                          std::norm(err_dot) / (sc_dot * sc_dot)));

      if (err <= 1.0) {
        t = clamped ? stop : t + h;
        y = ynew;
        k1 = k7;
        ++out.steps_taken;
        // Wronskian drift is only a meaningful health metric while the
        // cancellation head-room e^{2 log_scale} |eps||eps'| eps_mach stays
        // below the reported drift resolution.
        const double headroom =
            2.0 * log_scale + std::log(std::max(std::abs(y.eps) * std::abs(y.eps_dot), 1e-300));
        if (headroom < 16.0) {
          const std::complex<double> w =
              (y.eps_dot * std::conj(y.eps) - std::conj(y.eps_dot) * y.eps) *
              std::exp(2.0 * log_scale);
          out.wronskian_drift =
              std::max(out.wronskian_drift, std::abs(w - std::complex<double>(0.0, 2.0)));
        }
        if (std::binary_search(sorted_samples.begin(), sorted_samples.end(), t))
          out.samples.push_back({t, y.eps, y.eps_dot, log_scale});
        const double mag = std::max(std::abs(y.eps), std::abs(y.eps_dot));
        if (mag > 1e100) {
          const double s = std::log(mag);
          y.eps *= std::exp(-s);
          y.eps_dot *= std::exp(-s);
          k1.eps *= std::exp(-s);
          k1.eps_dot *= std::exp(-s);
          log_scale += s;
        }
      } else {
        ++out.steps_rejected;
      }
      const double fac =
          0.9 * std::pow(std::max(err, 1e-10), -0.7 / 5.0) * std::pow(err_prev, 0.4 / 5.0);
      if (err <= 1.0) err_prev = std::max(err, 1e-10);
      h *= std::clamp(fac, 0.2, 5.0);
    }
  }
  return out;
}

/// Convenience overload: n_samples uniform sample times on [t0, t1].
inline IntegrationResult integrate_mode(const FrequencyProfile& profile, double t0, double t1,
                                        double tol, int n_samples = 201,
                                        bool declare_breakpoints = true) {
  std::vector<double> ts;
  ts.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i)
    ts.push_back(t0 + (t1 - t0) * static_cast<double>(i) / (n_samples - 1));
  return integrate_mode(profile, t0, t1, tol, ts, declare_breakpoints);
}

namespace detail {

/// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct PanelResult {
  double integral;
  double error;
};

inline PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(mid);
  double kron = kWgk[7] * fv[7];
  double gauss = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    const double x = half * kXgk[i];
    fv[i] = f(mid - x);
    fv[14 - i] = f(mid + x);
    kron += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  // QUADPACK-style estimate: the raw |K - G| sharpened by the smoothness
  // scale resasc = int |f - mean|.
  const double mean = kron * 0.5;
  double resasc = kWgk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  resasc *= half;
  kron *= half;
  gauss *= half;
  const double diff = std::fabs(kron - gauss);
  double err = diff;
  if (resasc != 0.0 && diff != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * diff / resasc, 1.5));
  return {kron, err};
}

inline void quad_recurse(const std::function<double(double)>& f, double a, double b, double tol,
                         int depth, int& budget, double& value, double& err_total) {
  const PanelResult r = gk15(f, a, b);
  if ((r.error <= tol || depth >= 48) && depth >= 2) {
    value += r.integral;
    err_total += r.error;
    return;
  }
  if (--budget <= 0)
    throw ConvergenceError("quad_adaptive: panel budget exhausted");
  const double mid = 0.5 * (a + b);
  quad_recurse(f, a, mid, tol * 0.5, depth + 1, budget, value, err_total);
  quad_recurse(f, mid, b, tol * 0.5, depth + 1, budget, value, err_total);
}

}  // namespace detail

struct QuadResult {
  double value;
  double error_estimate;
};

/// Adaptive Gauss-Kronrod quadrature of f over [a, b] to absolute
/// tolerance tol.  Deterministic: panels are split midpoint-first in a
/// fixed depth-first order.
inline QuadResult quad_adaptive(const std::function<double(double)>& f, double a, double b,
                                double tol = 1e-11) {
  if (!(a < b)) throw DomainError("quad_adaptive: requires a < b");
  double value = 0.0, err = 0.0;
  int budget = 20000;
  detail::quad_recurse(f, a, b, tol, 0, budget, value, err);
  return {value, err};
}

}  // namespace invosc::oracle
