#pragma once

// Command-line front end: scenario simulation, figure-data emission, and
// the validation suite.  All numeric output is deterministic: %.17g
// formatting, '.' decimal separator, '\n' line endings, fixed column
// order, no timestamps.  Quantities that can leave double range are
// emitted as (mantissa, log-scale) column pairs: value = mant * e^{lg},
// with lg = 0 whenever plain emission is possible.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "invosc/errors.hpp"
#include "invosc/mode.hpp"
#include "invosc/moments.hpp"
#include "invosc/oracle.hpp"
#include "invosc/spectra.hpp"
#include "invosc/validation.hpp"

namespace invosc::cli {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

/// (value-or-mantissa, log-scale) pair for one scaled real.
inline std::pair<std::string, std::string> emit_scaled(const ScaledReal& v) {
  if (v.mant == 0.0) return {"0", "0"};
  const double total = v.log_scale + std::log(std::fabs(v.mant));
  if (std::fabs(total) <= kPlainExportLogLimit)
    return {fmt17(std::copysign(std::exp(total), v.mant)), "0"};
  const auto n = v.normalized();
  return {fmt17(n.mant), fmt17(n.log_scale)};
}

struct ComplexColumns {
  std::string re, im, lg;
};

inline ComplexColumns emit_scaled(const ScaledComplex& v) {
  const double a = std::abs(v.mant);
  if (a == 0.0) return {"0", "0", "0"};
  const double total = v.log_scale + std::log(a);
  if (std::fabs(total) <= kPlainExportLogLimit) {
    const Complex plain = v.mant * std::exp(v.log_scale);
    return {fmt17(plain.real()), fmt17(plain.imag()), "0"};
  }
  const auto n = v.normalized();
  return {fmt17(n.mant.real()), fmt17(n.mant.imag()), fmt17(n.log_scale)};
}

inline std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) + ": cannot parse '" + tok + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

inline InitialState parse_initial(const std::string& s) {
  if (s.rfind("fock:", 0) == 0) {
    const int n = std::stoi(s.substr(5));
    return InitialState::fock(n);
  }
  if (s.rfind("gaussian:", 0) == 0) {
    const auto v = parse_list(s.substr(9), "--initial gaussian");
    if (v.size() != 3 && v.size() != 5)
      throw CLI::ValidationError("--initial gaussian needs x2,p2,xp[,x0,p0]");
    return InitialState::gaussian(v[0], v[1], v[2], v.size() == 5 ? v[3] : 0.0,
                                  v.size() == 5 ? v[4] : 0.0);
  }
  throw CLI::ValidationError("--initial must be fock:N or gaussian:x2,p2,xp[,x0,p0]");
}

}  // namespace detail

struct SimulateConfig {
  FrequencyProfile profile = FrequencyProfile::power_crossing(2, 50);
  InitialState initial = InitialState::fock(0);
  double t0 = -1.0, t1 = 2.0;
  int steps = 600;
  bool with_oracle = false;
  double oracle_tol = 1e-10;
  double tau = 1.0;  // output unit rescaling
  std::string echo;  // metadata line content
};

/// The simulate CSV.  Columns: t, eps_re, eps_im, epsdot_re, epsdot_im,
/// x2, p2, xp, energy, ratio, wronskian_abs_err, then the log-scale
/// columns of the scaled pairs, then (optionally) the oracle columns.
inline std::string build_simulate_csv(const SimulateConfig& cfg) {
  if (cfg.steps < 1) throw DomainError("simulate: steps must be >= 1");
  if (!(cfg.t1 > cfg.t0)) throw DomainError("simulate: needs t1 > t0");

  const auto tc = compute_coefficients(cfg.profile);
  std::vector<double> ts(cfg.steps);
  for (int i = 0; i < cfg.steps; ++i)
    ts[i] = cfg.t0 + (cfg.t1 - cfg.t0) * i / (cfg.steps - 1.0 + (cfg.steps == 1));

  std::optional<oracle::IntegrationResult> orun;
  if (cfg.with_oracle)
    orun = oracle::integrate_mode(cfg.profile, cfg.t0, cfg.t1, cfg.oracle_tol, ts);

  const auto m0 = mode_at(cfg.profile, tc, -1.0);
  const double e0 = mean_energy(propagate_second(cfg.initial, m0), m0.gamma);

  const double st = std::sqrt(cfg.tau);

  std::ostringstream os;
  os << "# " << cfg.echo << "\n";
  os << "t,eps_re,eps_im,epsdot_re,epsdot_im,x2,p2,xp,energy,ratio,wronskian_abs_err,"
        "eps_lg,epsdot_lg,x2_lg,p2_lg,xp_lg,energy_lg,ratio_lg";
  if (cfg.with_oracle)
    os << ",oracle_eps_re,oracle_eps_im,oracle_epsdot_re,oracle_epsdot_im,oracle_abs_dev";
  os << "\n";

  for (int i = 0; i < cfg.steps; ++i) {
    const double t = ts[i];
    const auto m = mode_at(cfg.profile, tc, t);
    const auto q = propagate_second(cfg.initial, m);
    const auto es = m.eps.scaled();
    const auto ds = m.eps_dot.scaled();
    const auto energy = mean_energy_scaled(q, m.gamma);
    const ScaledReal ratio{energy.mant / e0, energy.log_scale};
    const double werr = std::abs(m.wronskian() - Complex(0.0, 2.0));

    const auto eps_cols = detail::emit_scaled(ScaledComplex{es.mant * st, es.log_scale});
    const auto dot_cols = detail::emit_scaled(ScaledComplex{ds.mant / st, ds.log_scale});
    const auto x2_cols = detail::emit_scaled(ScaledReal{q.x2_m * cfg.tau, q.log_scale});
    const auto p2_cols = detail::emit_scaled(ScaledReal{q.p2_m / cfg.tau, q.log_scale});
    const auto xp_cols = detail::emit_scaled(ScaledReal{q.xp_m, q.log_scale});
    const auto en_cols = detail::emit_scaled(ScaledReal{energy.mant / cfg.tau, energy.log_scale});
    const auto ra_cols = detail::emit_scaled(ratio);

    os << fmt17(t * cfg.tau) << ',' << eps_cols.re << ',' << eps_cols.im << ','
       << dot_cols.re << ',' << dot_cols.im << ',' << x2_cols.first << ','
       << p2_cols.first << ',' << xp_cols.first << ',' << en_cols.first << ','
       << ra_cols.first << ',' << fmt17(werr) << ',' << eps_cols.lg << ',' << dot_cols.lg
       << ',' << x2_cols.second << ',' << p2_cols.second << ',' << xp_cols.second << ','
       << en_cols.second << ',' << ra_cols.second;
    if (cfg.with_oracle) {
      const auto& s = orun->samples[i];
      const Complex oe = s.eps * std::exp(s.log_scale - es.log_scale);
      const Complex od = s.eps_dot * std::exp(s.log_scale - ds.log_scale);
      const double w0 = initial_frequency(cfg.profile);
      const double ref =
          std::max({std::abs(s.eps), std::abs(s.eps_dot) / w0, 1.0});
      const double dev =
          std::max(std::abs(es.mant - oe), std::abs(ds.mant - od) / w0) / ref;
      os << ',' << fmt17(oe.real() * st) << ',' << fmt17(oe.imag() * st) << ','
         << fmt17(od.real() / st) << ',' << fmt17(od.imag() / st) << ',' << fmt17(dev);
    }
    os << "\n";
  }
  return os.str();
}

struct DistributionConfig {
  std::vector<int> ns = {0};
  std::vector<double> rhos = {1.0};
  double emin = -10.0, emax = 10.0;
  int points = 600;
  std::string echo;
};

inline std::string build_distribution_csv(const DistributionConfig& cfg) {
  if (cfg.points < 2) throw DomainError("distribution: points must be >= 2");
  if (!(cfg.emax > cfg.emin)) throw DomainError("distribution: needs emax > emin");
  std::vector<spectra::SpectralParams> params;
  for (int n : cfg.ns)
    for (double rho : cfg.rhos) params.push_back(spectra::SpectralParams::make(n, rho));

  std::ostringstream os;
  os << "# " << cfg.echo << "\n";
  os << "e_tilde";
  for (const auto& p : params) {
    char name[48];
    std::snprintf(name, sizeof(name), "P%d_rho%g", p.n, p.rho);
    os << ',' << name;
  }
  os << "\n";
  for (int i = 0; i < cfg.points; ++i) {
    const double e = cfg.emin + (cfg.emax - cfg.emin) * i / (cfg.points - 1.0);
    os << fmt17(e);
    for (const auto& p : params) os << ',' << fmt17(spectra::density(p, e));
    os << "\n";
  }
  return os.str();
}

struct RatioConfig {
  double n = 2.0, G = 50.0, t = 0.0;
  bool revival = false;
  std::string echo;
};

/// One row per quantity: the exact ratio plus every adiabatic prediction
/// applicable at this t.
inline std::string build_ratio_csv(const RatioConfig& cfg) {
  const double nu = 1.0 / (cfg.n + 2.0);
  std::ostringstream os;
  os << "# " << cfg.echo << "\n";
  os << "quantity,value,log_scale\n";
  const auto emit = [&os](const char* name, const ScaledReal& v) {
    const auto cols = detail::emit_scaled(v);
    os << name << ',' << cols.first << ',' << cols.second << "\n";
  };
  const auto branch =
      cfg.revival ? PostCrossingBranch::revival : PostCrossingBranch::inverted;
  emit("ratio_exact", energy_ratio_exact(nu, cfg.G, cfg.t, branch));
  if (cfg.t < 0.0)
    emit("adiabatic_pre", adiabatic_prediction(AdiabaticRegime::pre, {nu, cfg.G, cfg.t}));
  emit("crossing_value", adiabatic_prediction(AdiabaticRegime::crossing, {nu, cfg.G, cfg.t}));
  if (cfg.t > 0.0) {
    if (cfg.revival)
      emit("adiabatic_revival",
           adiabatic_prediction(AdiabaticRegime::revival, {nu, cfg.G, cfg.t}));
    else
      emit("inverted_asymptotic",
           adiabatic_prediction(AdiabaticRegime::inverted_asymptotic, {nu, cfg.G, cfg.t}));
  }
  return os.str();
}

struct FluctuationsConfig {
  bool jump = true;
  double rho = 1.0;        // jump
  double n = 2.0;          // revival power
  double omega_ratio = 1.0;  // omega(t)/omega0 for the revival forms
  std::vector<int> fock = {0};
  std::string echo;
};

inline std::string build_fluctuations_csv(const FluctuationsConfig& cfg) {
  std::ostringstream os;
  os << "# " << cfg.echo << "\n";
  os << "regime,N,param,mean_energy,e2,sigma_e,ratio\n";
  for (int N : cfg.fock) {
    const EnergyReport rep = cfg.jump
                                 ? make_jump_report(cfg.rho, N)
                                 : make_revival_report(1.0 / (cfg.n + 2.0), cfg.omega_ratio, N);
    const double e2 = rep.variance + rep.mean_energy * rep.mean_energy;
    os << (cfg.jump ? "jump" : "revival") << ',' << N << ','
       << fmt17(cfg.jump ? cfg.rho : cfg.n) << ',' << fmt17(rep.mean_energy) << ','
       << fmt17(e2) << ',' << fmt17(rep.variance) << ',' << fmt17(rep.ratio.value())
       << "\n";
  }
  return os.str();
}

/// Criterion 12: the emitters must be byte-stable run to run.
inline void check_determinism(std::vector<validation::Check>& out) {
  SimulateConfig sim;
  sim.profile = FrequencyProfile::sudden_jump(2.0);
  sim.initial = InitialState::fock(1);
  sim.t0 = -0.5;
  sim.t1 = 1.5;
  sim.steps = 101;
  sim.echo = "determinism probe";
  const bool sim_ok = build_simulate_csv(sim) == build_simulate_csv(sim);
  validation::detail::add(out, 12, "simulate_csv_byte_identical", 1.0, sim_ok ? 1.0 : 0.0,
                          1e-15);

  DistributionConfig dist;
  dist.ns = {0, 4, 8};
  dist.rhos = {0.5, 1.0, 2.0};
  dist.emin = -12.0;
  dist.emax = 12.0;
  dist.points = 201;
  dist.echo = "determinism probe";
  const bool dist_ok = build_distribution_csv(dist) == build_distribution_csv(dist);
  validation::detail::add(out, 12, "distribution_csv_byte_identical", 1.0,
                          dist_ok ? 1.0 : 0.0, 1e-15);
}

inline std::string render_validation_report(const std::vector<validation::Check>& checks) {
  std::ostringstream os;
  os << "name,expected,observed,tolerance,status\n";
  for (const auto& c : checks) {
    os << c.name << ',' << fmt17(c.expected) << ',' << fmt17(c.observed) << ','
       << fmt17(c.tolerance) << ',' << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

/// Full validation: the physics checks plus output determinism, including
/// byte-stability of the report itself.
inline std::vector<validation::Check> run_all_checks() {
  auto checks = validation::run_physics_checks();
  check_determinism(checks);
  const std::string once = render_validation_report(checks);
  const std::string twice = render_validation_report(checks);
  validation::detail::add(checks, 12, "validate_report_byte_identical", 1.0,
                          once == twice ? 1.0 : 0.0, 1e-15);
  return checks;
}

namespace detail {

inline void write_output(const std::string& path, const std::string& content,
                         std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file: " + path);
  f << content;
}

inline std::string join_args(int argc, const char* const* argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

inline FrequencyProfile profile_from_flags(const std::string& kind, double n, double G,
                                           double rho, double kappa, double omega0,
                                           double tau, bool has_G) {
  if (kind == "power" || kind == "revival") {
    const double g_eff = has_G ? G : omega0 * tau;
    return kind == "power" ? FrequencyProfile::power_crossing(n, g_eff)
                           : FrequencyProfile::power_revival(n, g_eff);
  }
  if (kind == "jump") return FrequencyProfile::sudden_jump(rho);
  if (kind == "harmonic") return FrequencyProfile::constant_harmonic(has_G ? G : omega0);
  if (kind == "inverted") return FrequencyProfile::constant_inverted(kappa);
  throw CLI::ValidationError("--profile must be power|revival|jump|harmonic|inverted");
}

}  // namespace detail

/// Entry point shared by the binary and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for a quantum oscillator whose stiffness crosses zero into the "
               "inverted regime"};
  app.require_subcommand(1);

  // ---- simulate ----
  auto* sim = app.add_subcommand("simulate", "emit mode/moment/energy time series as CSV");
  std::string s_profile = "power", s_initial = "fock:0", s_output;
  double s_n = 2.0, s_G = 50.0, s_rho = 1.0, s_kappa = 1.0, s_omega0 = 1.0, s_tau = 1.0;
  double s_t0 = -1.0, s_t1 = 2.0, s_tol = 1e-10;
  int s_steps = 600;
  bool s_oracle = false;
  sim->add_option("--profile", s_profile, "power|revival|jump|harmonic|inverted");
  auto* s_gopt = sim->add_option("--G", s_G, "omega0*tau for power profiles");
  sim->add_option("--n", s_n, "power exponent");
  sim->add_option("--rho", s_rho, "kappa/omega0 for the jump");
  sim->add_option("--kappa", s_kappa, "stiffness for the constant inverted profile");
  sim->add_option("--omega0", s_omega0, "physical omega0 (with --tau fixes G)");
  sim->add_option("--tau", s_tau, "physical tau; rescales output units");
  sim->add_option("--initial", s_initial, "fock:N or gaussian:x2,p2,xp[,x0,p0]");
  sim->add_option("--t0", s_t0, "first sample time (tau units)");
  sim->add_option("--t1", s_t1, "last sample time (tau units)");
  sim->add_option("--steps", s_steps, "number of rows");
  sim->add_flag("--oracle", s_oracle, "append ODE-oracle columns");
  sim->add_option("--tol", s_tol, "oracle tolerance");
  sim->add_option("--output", s_output, "output path (default stdout)");

  // ---- ratio ----
  auto* rat = app.add_subcommand("ratio", "exact energy ratio and adiabatic predictions");
  double r_n = 2.0, r_G = 50.0, r_t = 0.0;
  bool r_revival = false;
  std::string r_output;
  rat->add_option("--n", r_n, "power exponent");
  rat->add_option("--G", r_G, "omega0*tau");
  rat->add_option("--t", r_t, "time (tau units)");
  rat->add_flag("--revival", r_revival, "gamma returns positive after the crossing");
  rat->add_option("--output", r_output, "output path (default stdout)");

  // ---- distribution ----
  auto* dis = app.add_subcommand("distribution", "energy probability densities as CSV");
  std::string d_ns = "0", d_rhos = "1", d_output;
  double d_emin = -10.0, d_emax = 10.0;
  int d_points = 600;
  dis->add_option("--n", d_ns, "comma list of Fock indices");
  dis->add_option("--rho", d_rhos, "comma list of kappa/omega0 ratios");
  dis->add_option("--emin", d_emin, "lower E~ bound");
  dis->add_option("--emax", d_emax, "upper E~ bound");
  dis->add_option("--points", d_points, "number of rows");
  dis->add_option("--output", d_output, "output path (default stdout)");

  // ---- fluctuations ----
  auto* flu = app.add_subcommand("fluctuations", "<E^2> and sigma_E closed forms");
  std::string f_regime = "jump", f_fock = "0", f_output;
  double f_rho = 1.0, f_n = 2.0, f_omega_ratio = 1.0;
  flu->add_option("--regime", f_regime, "jump|revival");
  flu->add_option("--rho", f_rho, "kappa/omega0 (jump)");
  flu->add_option("--n", f_n, "power exponent (revival)");
  flu->add_option("--omega-ratio", f_omega_ratio, "omega(t)/omega0 (revival)");
  flu->add_option("--N", f_fock, "comma list of Fock indices");
  flu->add_option("--output", f_output, "output path (default stdout)");

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "run the validation suite");
  std::string v_output;
  val->add_option("--output", v_output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::string echo = detail::join_args(argc, argv);
  try {
    if (sim->parsed()) {
      SimulateConfig cfg;
      cfg.profile = detail::profile_from_flags(s_profile, s_n, s_G, s_rho, s_kappa, s_omega0,
                                               s_tau, s_gopt->count() > 0);
      cfg.initial = detail::parse_initial(s_initial);
      cfg.t0 = s_t0;
      cfg.t1 = s_t1;
      cfg.steps = s_steps;
      cfg.with_oracle = s_oracle;
      cfg.oracle_tol = s_tol;
      cfg.tau = s_tau;
      cfg.echo = echo;
      detail::write_output(s_output, build_simulate_csv(cfg), out);
      return 0;
    }
    if (rat->parsed()) {
      RatioConfig cfg{r_n, r_G, r_t, r_revival, echo};
      detail::write_output(r_output, build_ratio_csv(cfg), out);
      return 0;
    }
    if (dis->parsed()) {
      DistributionConfig cfg;
      cfg.ns.clear();
      for (double v : detail::parse_list(d_ns, "--n")) cfg.ns.push_back(static_cast<int>(v));
      cfg.rhos = detail::parse_list(d_rhos, "--rho");
      cfg.emin = d_emin;
      cfg.emax = d_emax;
      cfg.points = d_points;
      cfg.echo = echo;
      detail::write_output(d_output, build_distribution_csv(cfg), out);
      return 0;
    }
    if (flu->parsed()) {
      FluctuationsConfig cfg;
      if (f_regime != "jump" && f_regime != "revival")
        throw CLI::ValidationError("--regime must be jump or revival");
      cfg.jump = f_regime == "jump";
      cfg.rho = f_rho;
      cfg.n = f_n;
      cfg.omega_ratio = f_omega_ratio;
      cfg.fock.clear();
      for (double v : detail::parse_list(f_fock, "--N"))
        cfg.fock.push_back(static_cast<int>(v));
      cfg.echo = echo;
      detail::write_output(f_output, build_fluctuations_csv(cfg), out);
      return 0;
    }
    if (val->parsed()) {
      const auto checks = run_all_checks();
      detail::write_output(v_output, render_validation_report(checks), out);
      bool all = true;
      for (const auto& c : checks) all = all && c.pass;
      return all ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace invosc::cli
