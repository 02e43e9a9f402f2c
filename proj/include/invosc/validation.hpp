#pragma once

// The numbered validation suite: every quantitative claim the library is
// expected to reproduce, runnable both from the standalone acceptance
// binary and from the CLI `validate` subcommand.
//
// Check 7a (sigma_E/<E>^2 = 16 for the N = 0, n = 2 revival) is retained
// as published even though the dynamically exact value is 16/9: the
// quoted 16 omits the beta^2 factor of <E>^2 = omega^2 beta^2 (N+1/2)^2.
// It is expected to FAIL; 7b/7c carry the corrected and the
// eigenscale-normalized statements, which pass.  See NOTES.md.

#include <cmath>
#include <string>
#include <vector>

#include "invosc/mode.hpp"
#include "invosc/moments.hpp"
#include "invosc/oracle.hpp"
#include "invosc/spectra.hpp"

namespace invosc::validation {

struct Check {
  int criterion = 0;
  std::string name;
  double expected = 0.0;
  double observed = 0.0;
  double tolerance = 0.0;  // relative unless |expected| == 0, then absolute
  bool pass = false;
};

namespace detail {

inline void add(std::vector<Check>& out, int crit, std::string name, double expected,
                double observed, double tol) {
  Check c{crit, std::move(name), expected, observed, tol, false};
  if (expected == 0.0)
    c.pass = std::fabs(observed) <= tol;
  else
    c.pass = std::fabs(observed - expected) <= tol * std::fabs(expected);
  out.push_back(std::move(c));
}

/// Threshold check: passes when observed >= lower_bound.
inline void add_ge(std::vector<Check>& out, int crit, std::string name, double lower_bound,
                   double observed) {
  Check c{crit, std::move(name), lower_bound, observed, 0.0, observed >= lower_bound};
  out.push_back(std::move(c));
}

inline std::vector<FrequencyProfile> grid_profiles() {
  std::vector<FrequencyProfile> ps;
  for (double n : {1.0, 2.0, 4.0})
    for (double G : {1.0, 10.0, 50.0}) ps.push_back(FrequencyProfile::power_crossing(n, G));
  for (double rho : {0.5, 1.0, 2.0}) ps.push_back(FrequencyProfile::sudden_jump(rho));
  return ps;
}

inline std::string profile_tag(const FrequencyProfile& p) {
  if (p.is_power())
    return "n" + std::to_string(static_cast<int>(p.n)) + "_G" +
           std::to_string(static_cast<int>(p.G));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "rho%g", p.rho);
  return buf;
}

}  // namespace detail

/// Criterion 1: Wronskian conservation of the closed-form mode.
inline void check_wronskian(std::vector<Check>& out) {
  for (const auto& prof : detail::grid_profiles()) {
    const auto tc = compute_coefficients(prof);
    double worst = 0.0;
    for (double t = -1.0; t <= 2.0 + 1e-12; t += 0.005) {
      const auto m = mode_at(prof, tc, t);
      worst = std::max(worst, std::abs(m.wronskian() - Complex(0.0, 2.0)));
    }
    detail::add(out, 1, "wronskian_" + detail::profile_tag(prof), 0.0, worst, 1e-8);
  }
}

/// Criterion 2: closed form versus the adaptive ODE oracle.
inline void check_mode_vs_oracle(std::vector<Check>& out) {
  for (const auto& prof : detail::grid_profiles()) {
    const auto tc = compute_coefficients(prof);
    const auto run = oracle::integrate_mode(prof, -1.0, 2.0, 1e-10, 301);
    const double w0 = initial_frequency(prof);
    double worst = 0.0;
    for (const auto& s : run.samples) {
      const auto m = mode_at(prof, tc, s.t);
      const auto es = m.eps.scaled();
      const auto ds = m.eps_dot.scaled();
      const Complex de = es.mant * std::exp(es.log_scale - s.log_scale) - s.eps;
      const Complex dd = ds.mant * std::exp(ds.log_scale - s.log_scale) - s.eps_dot;
      const double ref = std::max({std::abs(s.eps), std::abs(s.eps_dot) / w0, 1.0});
      worst = std::max(worst, std::max(std::abs(de), std::abs(dd) / w0) / ref);
    }
    detail::add(out, 2, "mode_vs_oracle_" + detail::profile_tag(prof), 0.0, worst, 1e-6);
  }
}

/// Criterion 3: pre-crossing adiabatic law at G = 100, n = 2.
inline void check_pre_crossing_law(std::vector<Check>& out) {
  double worst = 0.0;
  for (double t = -1.0; t <= -0.5 + 1e-12; t += 0.005) {
    const double r = energy_ratio_exact(0.25, 100.0, t).value();
    const double w = std::pow(-t, 1.0);  // omega/omega0 for n = 2
    worst = std::max(worst, std::fabs(r / w - 1.0));
  }
  detail::add(out, 3, "adiabatic_pre_n2_G100", 0.0, worst, 0.01);
}

/// Criterion 4: revival law R omega0/omega -> (1+cos^2)/sin^2 at G = 100.
inline void check_revival_law(std::vector<Check>& out) {
  for (auto [n, target, tag] :
       {std::tuple{2.0, 3.0, "revival_ratio_n2"}, {1.0, 5.0 / 3.0, "revival_ratio_n1"}}) {
    const double nu = 1.0 / (n + 2.0);
    double worst_val = target;
    double worst_dev = 0.0;
    for (double t = 1.0; t <= 2.0 + 1e-12; t += 0.02) {
      const double r = energy_ratio_exact(nu, 100.0, t, PostCrossingBranch::revival).value();
      const double v = r / std::pow(t, n / 2.0);
      if (std::fabs(v - target) > worst_dev) {
        worst_dev = std::fabs(v - target);
        worst_val = v;
      }
    }
    detail::add(out, 4, tag, target, worst_val, 0.02);
  }
}

/// Criterion 5: crossing value R(0) against formula and oracle at G = 50.
inline void check_crossing_value(std::vector<Check>& out) {
  const double formula = adiabatic_prediction(AdiabaticRegime::crossing, {0.25, 50.0}).value();
  const double exact = energy_ratio_exact(0.25, 50.0, 0.0).value();
  const auto run = oracle::integrate_mode(FrequencyProfile::power_crossing(2, 50), -1.0, 0.0,
                                          1e-11, std::vector<double>{0.0});
  const auto& s = run.samples.back();
  const double r0_oracle = std::norm(s.eps_dot * std::exp(s.log_scale)) / (2.0 * 50.0);
  detail::add(out, 5, "crossing_R0_formula_vs_oracle", r0_oracle, formula, 0.02);
  detail::add(out, 5, "crossing_R0_exact_vs_oracle", r0_oracle, exact, 1e-7);
}

/// Criterion 6: sudden-jump energetics.
inline void check_jump_energetics(std::vector<Check>& out) {
  double worst = 0.0;
  for (double rho : {0.5, 1.0, 2.0, 5.0}) {
    auto [vp, vm] = jump_v(rho);
    for (int N : {0, 1, 3}) {
      const double got = inverted_energy(vp, vm, InitialState::fock(N), rho);
      const double want = 0.25 * (2.0 * N + 1.0) * (1.0 - rho * rho);
      worst = std::max(worst, std::fabs(got - want));
    }
  }
  detail::add(out, 6, "jump_energy_fock_grid", 0.0, worst, 1e-12);

  auto [vp1, vm1] = jump_v(1.0);
  detail::add(out, 6, "jump_energy_zero_at_rho1", 0.0,
              inverted_energy(vp1, vm1, InitialState::fock(0), 1.0), 1e-13);
  auto [vp2, vm2] = jump_v(2.0);
  detail::add(out, 6, "jump_energy_N0_rho2", -0.75,
              inverted_energy(vp2, vm2, InitialState::fock(0), 2.0), 1e-12);

  const auto prof = FrequencyProfile::sudden_jump(2.0);
  const auto tc = compute_coefficients(prof);
  const auto init = InitialState::fock(0);
  const auto qa = propagate_second(init, mode_at(prof, tc, 1.1));
  const auto qb = propagate_second(init, mode_at(prof, tc, 2.2));
  detail::add_ge(out, 6, "jump_x2_growth_ge_e4", std::exp(4.0), qb.x2() / qa.x2());
  const double ea = mean_energy(qa, -4.0), eb = mean_energy(qb, -4.0);
  detail::add(out, 6, "jump_energy_time_independence", 0.0, std::fabs(eb - ea), 1e-10);
}

/// Criterion 7: energy fluctuations.
inline void check_fluctuations(std::vector<Check>& out) {
  // 7a as published: expected to fail; the exact dynamics give 16/9.
  const auto prof = FrequencyProfile::power_revival(2, 100);
  const auto tc = compute_coefficients(prof);
  double pipeline = 0.0;
  int count = 0;
  for (double t : {1.0, 1.5, 2.0}) {
    const auto m = mode_at(prof, tc, t);
    const auto f = energy_fluctuations_exact(m, 0);
    const auto q = propagate_second(InitialState::fock(0), m);
    const double mean = mean_energy(q, m.gamma);
    pipeline += f.variance / (mean * mean);
    ++count;
  }
  pipeline /= count;
  detail::add(out, 7, "sigma_ratio_n2_N0", 16.0, pipeline, 0.05);
  detail::add(out, 7, "sigma_ratio_n2_N0_corrected", 16.0 / 9.0, pipeline, 0.05);

  auto [up, um] = revival_u(0.25);
  detail::add(out, 7, "sigma_over_eigenscale_n2_N0_closed", 16.0,
              variance_over_eigenscale_revival(up, um, 0), 1e-12);

  detail::add(out, 7, "jump_E2_N0_rho1", 0.5, variance_fock_jump(1.0, 0).e2, 1e-10);
  detail::add(out, 7, "jump_E2_N1_rho1", 1.5, variance_fock_jump(1.0, 1).e2, 1e-10);
  detail::add(out, 7, "jump_sigma_N0_rho1", 0.5, variance_fock_jump(1.0, 0).variance, 1e-10);
}

/// Criterion 8: spectral normalization and quadrature moments.
inline void check_spectral_moments(std::vector<Check>& out) {
  double worst_norm = 0.0, worst_mean = 0.0, worst_second = 0.0;
  for (int n = 0; n <= 15; ++n) {
    for (double rho : {0.5, 1.0, 2.0}) {
      const auto m = spectra::density_moments(spectra::SpectralParams::make(n, rho));
      worst_norm = std::max(worst_norm, std::fabs(m.norm - 1.0));
      const double mean_want = spectra::mean_closed_form(n, rho);
      const double sec_want = spectra::second_moment_closed_form(n, rho);
      if (mean_want == 0.0)
        worst_mean = std::max(worst_mean, std::fabs(m.mean));
      else
        worst_mean = std::max(worst_mean, std::fabs((m.mean - mean_want) / mean_want));
      worst_second = std::max(worst_second, std::fabs((m.second - sec_want) / sec_want));
    }
  }
  detail::add(out, 8, "p_norm_grid", 0.0, worst_norm, 1e-8);
  detail::add(out, 8, "p_mean_vs_closed_grid", 0.0, worst_mean, 1e-6);
  detail::add(out, 8, "p_second_vs_closed_grid", 0.0, worst_second, 1e-6);
  detail::add(out, 8, "p0_norm_rho1", 1.0,
              spectra::density_moments(spectra::SpectralParams::make(0, 1.0)).norm, 1e-8);
}

/// Criterion 9: the two Gamma-magnitude integral identities.
inline void check_gamma_integrals(std::vector<Check>& out) {
  for (double a : {0.25, 0.75}) {
    const double i0 =
        oracle::quad_adaptive([a](double x) { return gamma_abs_sq(a, x); }, 0.0, 100.0, 1e-12)
            .value;
    const double want0 = std::pow(2.0, -2.0 * a) * kPi * std::tgamma(2.0 * a);
    char name[64];
    std::snprintf(name, sizeof(name), "gamma_integral_a%g", a);
    detail::add(out, 9, name, want0, i0, 1e-8);

    const double i2 = oracle::quad_adaptive(
                          [a](double x) { return x * x * gamma_abs_sq(a, x); }, 0.0, 100.0,
                          1e-12)
                          .value;
    const double want2 = std::pow(2.0, -2.0 * a - 1.0) * kPi * a * std::tgamma(2.0 * a);
    std::snprintf(name, sizeof(name), "gamma_x2_integral_a%g", a);
    detail::add(out, 9, name, want2, i2, 1e-8);
  }
}

/// Criterion 10: zero counts, tail slopes, reciprocity.
inline void check_spectral_structure(std::vector<Check>& out) {
  bool zeros_ok = true;
  double worst_slope = 0.0;
  for (int n = 0; n <= 15; ++n) {
    const auto rep = spectra::structure_report(spectra::SpectralParams::make(n, 1.0));
    if (!rep.zero_count.has_value() || *rep.zero_count != (n / 2) / 2) zeros_ok = false;
    worst_slope = std::max(worst_slope, std::fabs(rep.tail_slope / (-kPi / 2.0) - 1.0));
  }
  detail::add(out, 10, "zero_counts_floor_k_half", 1.0, zeros_ok ? 1.0 : 0.0, 1e-12);
  detail::add(out, 10, "tail_slope_minus_half_pi", 0.0, worst_slope, 0.03);

  double worst_rec = 0.0;
  for (auto [n, rho] : {std::pair{8, 2.0}, {10, 0.5}}) {
    for (int i = 0; i < 100; ++i) {
      const double e = -(n + 6.0) + (2.0 * n + 12.0) * i / 99.0;
      const double scale = std::max(spectra::density(n, rho, e), 1e-280);
      worst_rec = std::max(worst_rec, spectra::reciprocity_check(n, rho, e) / scale);
    }
  }
  detail::add(out, 10, "reciprocity_grid", 0.0, worst_rec, 1e-10);
}

/// Criterion 11: invariance of D across crossing and jump scenarios.
inline void check_universal_invariant(std::vector<Check>& out) {
  const auto gauss = InitialState::gaussian(0.8, 1.1, 0.9);
  const std::vector<std::pair<std::string, InitialState>> states = {
      {"fock0", InitialState::fock(0)}, {"fock3", InitialState::fock(3)}, {"gauss", gauss}};

  double worst = 0.0;
  const auto crossing = FrequencyProfile::power_crossing(2, 20);
  const auto tcc = compute_coefficients(crossing);
  for (const auto& [tag, st] : states) {
    const double d0 = invariant_d(propagate_second(st, mode_at(crossing, tcc, -1.0))).value();
    for (double t : {-0.3, 0.1, 0.4}) {
      const double dt = invariant_d(propagate_second(st, mode_at(crossing, tcc, t))).value();
      worst = std::max(worst, std::fabs(dt / d0 - 1.0));
    }
  }
  detail::add(out, 11, "d_invariance_crossing", 0.0, worst, 1e-9);

  worst = 0.0;
  for (double rho : {0.5, 1.0, 2.0}) {
    const auto prof = FrequencyProfile::sudden_jump(rho);
    const auto tc = compute_coefficients(prof);
    for (const auto& [tag, st] : states) {
      const double d0 = invariant_d(propagate_second(st, mode_at(prof, tc, -1.0))).value();
      for (double t : {0.6, 1.2}) {
        const double dt = invariant_d(propagate_second(st, mode_at(prof, tc, t))).value();
        worst = std::max(worst, std::fabs(dt / d0 - 1.0));
      }
    }
  }
  detail::add(out, 11, "d_invariance_jump", 0.0, worst, 1e-9);
}

/// Checks 1-11.  Criterion 12 (byte determinism of the CLI output) lives
/// with the CLI so it can exercise the real emitters; see cli.hpp.
inline std::vector<Check> run_physics_checks() {
  std::vector<Check> out;
  check_wronskian(out);
  check_mode_vs_oracle(out);
  check_pre_crossing_law(out);
  check_revival_law(out);
  check_crossing_value(out);
  check_jump_energetics(out);
  check_fluctuations(out);
  check_spectral_moments(out);
  check_gamma_integrals(out);
  check_spectral_structure(out);
  check_universal_invariant(out);
  return out;
}

}  // namespace invosc::validation
