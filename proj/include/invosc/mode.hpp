#pragma once

// The complex classical mode eps(t) solving eps'' + gamma(t) eps = 0 with
// Wronskian-normalized initial conditions eps(-tau) = omega0^{-1/2},
// eps'(-tau) = i omega0^{1/2}  (units tau = hbar = m = 1).
//
// Profiles:
//   PowerCrossing    gamma = omega0^2 (|t|/tau)^n for t <= 0,
//                            -omega0^2 (t/tau)^n for t >= 0
//   PowerRevival     same for t <= 0, +omega0^2 (t/tau)^n for t >= 0
//   SuddenJump       omega0^2 for t < 0, -kappa^2 for t >= 0 (kappa=rho)
//   ConstantHarmonic gamma = omega0^2 everywhere
//   ConstantInverted gamma = -kappa^2 everywhere (caller supplies v+-)
//
// Representation.  Every mode value is a sum of up to two channels
// radial * coeff * exp(log_scale), where radial is real and coeff complex.
// In the inverted power regime the two channels are the dominant
// (I_nu, scale +y) and recessive (K_nu, scale -y) solutions; both eps and
// eps' share the same complex coefficient on the dominant channel, so the
// exponentially large part of the Wronskian cancels exactly in floating
// point and |W - 2i| stays verifiable at any y.

#include <cmath>
#include <complex>
#include <string>

#include "invosc/errors.hpp"
#include "invosc/scaled.hpp"
#include "invosc/specfun.hpp"

namespace invosc {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

enum class ProfileKind {
  PowerCrossing,
  PowerRevival,
  SuddenJump,
  ConstantHarmonic,
  ConstantInverted,
};

struct FrequencyProfile {
  ProfileKind kind = ProfileKind::PowerCrossing;
  double n = 2.0;      // power exponent, > 0           (power profiles)
  double G = 1.0;      // omega0 * tau                  (power profiles)
  double rho = 1.0;    // kappa / omega0, > 0           (SuddenJump)
  double omega0c = 1.0;  // omega0                      (ConstantHarmonic)
  double kappa = 1.0;  // inverted stiffness            (ConstantInverted)

  static FrequencyProfile power_crossing(double n, double G) {
    if (!(n > 0.0) || !(G > 0.0))
      throw DomainError("power_crossing: requires n > 0 and G > 0");
    return {ProfileKind::PowerCrossing, n, G, 1.0, 1.0, 1.0};
  }
  static FrequencyProfile power_revival(double n, double G) {
    if (!(n > 0.0) || !(G > 0.0))
      throw DomainError("power_revival: requires n > 0 and G > 0");
    return {ProfileKind::PowerRevival, n, G, 1.0, 1.0, 1.0};
  }
  static FrequencyProfile sudden_jump(double rho) {
    if (!(rho > 0.0)) throw DomainError("sudden_jump: requires rho > 0");
    return {ProfileKind::SuddenJump, 0.0, 1.0, rho, 1.0, rho};
  }
  static FrequencyProfile constant_harmonic(double omega0) {
    if (!(omega0 > 0.0)) throw DomainError("constant_harmonic: requires omega0 > 0");
    return {ProfileKind::ConstantHarmonic, 0.0, omega0, 1.0, omega0, 1.0};
  }
  static FrequencyProfile constant_inverted(double kappa) {
    if (!(kappa > 0.0)) throw DomainError("constant_inverted: requires kappa > 0");
    return {ProfileKind::ConstantInverted, 0.0, 1.0, 1.0, 1.0, kappa};
  }

  bool is_power() const {
    return kind == ProfileKind::PowerCrossing || kind == ProfileKind::PowerRevival;
  }
  double nu() const { return 1.0 / (n + 2.0); }       // Bessel order, in (0, 1/2)
  double b_exponent() const { return 1.0 + n / 2.0; }  // y = g |t|^b
  double g() const { return 2.0 * G * nu(); }
  double y_of(double t) const { return g() * std::pow(std::fabs(t), b_exponent()); }
};

/// Stiffness gamma(t) (units omega0^2, tau = 1).
inline double gamma_of_t(const FrequencyProfile& p, double t) {
  switch (p.kind) {
    case ProfileKind::PowerCrossing:
      return (t <= 0.0) ? p.G * p.G * std::pow(-t, p.n) : -p.G * p.G * std::pow(t, p.n);
    case ProfileKind::PowerRevival:
      return p.G * p.G * std::pow(std::fabs(t), p.n);
    case ProfileKind::SuddenJump:
      // omega0 = 1; the jump happens at t = 0 (signed zero selects the side).
      return (t < 0.0 || (t == 0.0 && std::signbit(t))) ? 1.0 : -p.rho * p.rho;
    case ProfileKind::ConstantHarmonic:
      return p.omega0c * p.omega0c;
    case ProfileKind::ConstantInverted:
      return -p.kappa * p.kappa;
  }
  return 0.0;
}

/// omega0, the (pre-crossing) reference frequency of the profile.
inline double initial_frequency(const FrequencyProfile& p) {
  switch (p.kind) {
    case ProfileKind::PowerCrossing:
    case ProfileKind::PowerRevival:
      return p.G;
    case ProfileKind::ConstantHarmonic:
      return p.omega0c;
    default:
      return 1.0;
  }
}

inline bool has_jump_at_zero(const FrequencyProfile& p) {
  return p.kind == ProfileKind::SuddenJump;
}

/// Basis weights of the mode on each side of the crossing/jump.
/// (aPlus, bPlus) always hold the continuity-matched pair (-aMinus, bMinus).
/// For SuddenJump the v pair includes the accumulated pre-jump phase
/// e^{i omega0 tau}, so that eps(t) itself is continuous at t = 0; the
/// phase drops out of every v+ conj(v-) invariant.
struct TransitionCoefficients {
  Complex a_minus, b_minus;   // J basis, t < 0
  Complex a_plus, b_plus;     // I (or revival J) basis, t > 0
  Complex u_plus, u_minus;    // oscillatory asymptotic basis
  Complex v_plus, v_minus;    // exponential basis
};

/// Oscillatory-basis weights after an adiabatic crossing and revival:
/// u+ = 1/sin(nu pi), u- = i cot(nu pi); |u+|^2 - |u-|^2 = 1.
inline std::pair<Complex, Complex> revival_u(double nu) {
  if (!(nu > 0.0 && nu < 0.5)) throw DomainError("revival_u: requires nu in (0, 1/2)");
  const double s = std::sin(nu * kPi);
  const double c = std::cos(nu * kPi);
  return {Complex(1.0 / s, 0.0), Complex(0.0, c / s)};
}

/// Exponential-basis weights for a sudden jump omega0^2 -> -kappa^2 with
/// rho = kappa/omega0:  v+- = (sqrt(rho) +- i/sqrt(rho)) / sqrt(2).
/// Satisfies v+ v-* = i + (rho - 1/rho)/2.
inline std::pair<Complex, Complex> jump_v(double rho) {
  if (!(rho > 0.0)) throw DomainError("jump_v: requires rho > 0");
  const double r = std::sqrt(rho) / std::sqrt(2.0);
  const double s = 1.0 / (std::sqrt(rho) * std::sqrt(2.0));
  return {Complex(r, s), Complex(r, -s)};
}

/// (A-, B-) from the initial conditions at t = -tau:
///   A- = C [J_{1-nu}(g) - i J_{-nu}(g)],  B- = C [i J_nu(g) + J_{nu-1}(g)],
///   C = nu pi sqrt(G) / sin(nu pi), g = 2 G nu.
inline std::pair<Complex, Complex> coefficients_pre(double nu, double G) {
  if (!(nu > 0.0 && nu < 0.5)) throw DomainError("coefficients_pre: nu must be in (0, 1/2)");
  if (!(G > 0.0)) throw DomainError("coefficients_pre: G must be > 0");
  const double g = 2.0 * G * nu;
  const double c = nu * kPi * std::sqrt(G) / std::sin(nu * kPi);
  const Complex a = c * Complex(bessel_j(1.0 - nu, g), -bessel_j(-nu, g));
  const Complex b = c * Complex(bessel_j(nu - 1.0, g), bessel_j(nu, g));
  return {a, b};
}

/// Continuity of eps and eps' at the crossing: (A+, B+) = (-A-, B-).
inline std::pair<Complex, Complex> coefficients_post(Complex a_minus, Complex b_minus) {
  return {-a_minus, b_minus};
}

/// All basis weights the given profile needs.
inline TransitionCoefficients compute_coefficients(const FrequencyProfile& p) {
  TransitionCoefficients tc{};
  switch (p.kind) {
    case ProfileKind::PowerCrossing:
    case ProfileKind::PowerRevival: {
      auto [am, bm] = coefficients_pre(p.nu(), p.G);
      auto [ap, bp] = coefficients_post(am, bm);
      tc.a_minus = am;
      tc.b_minus = bm;
      tc.a_plus = ap;
      tc.b_plus = bp;
      if (p.kind == ProfileKind::PowerRevival) {
        auto [up, um] = revival_u(p.nu());
        tc.u_plus = up;
        tc.u_minus = um;
      }
      return tc;
    }
    case ProfileKind::SuddenJump: {
      auto [vp, vm] = jump_v(p.rho);
      const Complex phase = std::exp(Complex(0.0, 1.0));  // e^{i omega0 tau}, omega0=tau=1
      tc.v_plus = vp * phase;
      tc.v_minus = vm * phase;
      return tc;
    }
    case ProfileKind::ConstantHarmonic:
      return tc;
    case ProfileKind::ConstantInverted: {
      // Canonical pair matching eps(-tau) = 1, eps'(-tau) = i (omega0 = 1).
      const double k = p.kappa;
      tc.v_plus = std::sqrt(k / 2.0) * Complex(1.0, 1.0 / k) * std::exp(k);
      tc.v_minus = std::sqrt(k / 2.0) * Complex(1.0, -1.0 / k) * std::exp(-k);
      return tc;
    }
  }
  return tc;
}

/// One channel of a mode value: radial * coeff * exp(log_scale).
struct ModeChannel {
  double radial = 0.0;
  Complex coeff{0.0, 0.0};
  double log_scale = 0.0;
};

/// A mode value as the sum of up to two channels.
struct ModeAmplitude {
  ModeChannel ch[2];

  ScaledComplex scaled() const {
    const bool has0 = ch[0].radial != 0.0, has1 = ch[1].radial != 0.0;
    if (!has0 && !has1) return {{0.0, 0.0}, 0.0};
    double top = has0 ? ch[0].log_scale : ch[1].log_scale;
    if (has0 && has1) top = std::max(ch[0].log_scale, ch[1].log_scale);
    Complex m{0.0, 0.0};
    for (const auto& c : ch)
      if (c.radial != 0.0) m += c.radial * c.coeff * std::exp(c.log_scale - top);
    return {m, top};
  }

  Complex value() const { return scaled().value(); }
};

/// The mode at one instant.  eps carries units omega0^{-1/2}, eps_dot
/// omega0^{+1/2}; gamma is the stiffness at t.
struct ClassicalMode {
  ModeAmplitude eps, eps_dot;
  double t = 0.0;
  double gamma = 0.0;
  double omega0 = 1.0;

  Complex eps_value() const { return eps.value(); }
  Complex eps_dot_value() const { return eps_dot.value(); }

  /// eps' eps* - eps'* eps, evaluated channel-pairwise so the dominant
  /// e^{+2y} part cancels exactly; accurate at any scale.
  Complex wronskian() const {
    double im = 0.0;
    for (const auto& cd : eps_dot.ch) {
      if (cd.radial == 0.0) continue;
      for (const auto& ce : eps.ch) {
        if (ce.radial == 0.0) continue;
        const double cross = (cd.coeff * std::conj(ce.coeff)).imag();
        if (cross == 0.0) continue;
        const double mag = cd.radial * ce.radial * cross;
        const double s = cd.log_scale + ce.log_scale;
        im += std::copysign(std::exp(s + std::log(std::fabs(mag))), mag);
      }
    }
    return {0.0, 2.0 * im};
  }
};

namespace detail {

/// H(p, x) = sum_m (x/4)^m / (m! (p+1)_m); J_p(y) = (y/2)^p H(p,-y^2)/Gamma(p+1).
inline double bessel_series_core(double p, double x) {
  double term = 1.0, sum = 1.0;
  for (int m = 0; m < 60; ++m) {
    term *= (x / 4.0) / ((m + 1.0) * (p + m + 1.0));
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) return sum;
  }
  throw ConvergenceError("bessel_series_core: did not converge");
}

/// Threshold below which the crossing neighbourhood uses the regularized
/// series forms (the |t|^{1/2} y^{+-nu} powers cancelled analytically,
/// avoiding 0 * inf at t -> 0).
inline constexpr double kSmallY = 0.5;
/// Above this y the inverted branch switches from the (I_nu, I_{-nu})
/// basis to the dominant/recessive (I_nu, K_nu) basis.
inline constexpr double kSplitY = 4.0;

inline ClassicalMode power_mode(const FrequencyProfile& p, const TransitionCoefficients& tc,
                                double t) {
  const double nu = p.nu(), g = p.g();
  const double at = std::fabs(t);
  const double y = p.y_of(t);
  const bool revival = p.kind == ProfileKind::PowerRevival;

  ClassicalMode m;
  m.t = t;
  m.gamma = gamma_of_t(p, t);
  m.omega0 = p.G;

  const Complex ca = (t <= 0.0) ? tc.a_minus : tc.a_plus;
  const Complex cb = (t <= 0.0) ? tc.b_minus : tc.b_plus;

  if (y <= kSmallY) {
    // Regularized neighbourhood of the crossing; exact at t = 0.
    const double w = (t <= 0.0 || revival) ? -y * y : y * y;
    const double gh = g / 2.0;
    const double p_nu = std::pow(gh, nu), p_mnu = std::pow(gh, -nu);
    const double tg_1p = std::tgamma(1.0 + nu), tg_1m = std::tgamma(1.0 - nu);
    const double tg_2m = std::tgamma(2.0 - nu);
    m.eps.ch[0] = {p_nu * at * bessel_series_core(nu, w) / tg_1p, ca, 0.0};
    m.eps.ch[1] = {p_mnu * bessel_series_core(-nu, w) / tg_1m, cb, 0.0};
    const double r_a = p_nu * bessel_series_core(nu - 1.0, w) / tg_1p;
    const double r_b =
        std::pow(gh, 2.0 - nu) * std::pow(at, p.n + 1.0) * bessel_series_core(1.0 - nu, w) /
        (nu * tg_2m);
    // Derivative weights per branch (d|t|/dt = -1 for t < 0):
    //   left:              -A J_{nu-1} + B J_{1-nu}
    //   inverted crossing: +A I_{nu-1} + B I_{1-nu}
    //   revival:           +A J_{nu-1} - B J_{1-nu}
    if (t <= 0.0) {
      m.eps_dot.ch[0] = {-r_a, ca, 0.0};
      m.eps_dot.ch[1] = {r_b, cb, 0.0};
    } else if (revival) {
      m.eps_dot.ch[0] = {r_a, ca, 0.0};
      m.eps_dot.ch[1] = {-r_b, cb, 0.0};
    } else {
      m.eps_dot.ch[0] = {r_a, ca, 0.0};
      m.eps_dot.ch[1] = {r_b, cb, 0.0};
    }
    return m;
  }

  const double sq = std::sqrt(at);
  const double dpre = y / (2.0 * nu * sq);
  if (t < 0.0 || revival) {
    m.eps.ch[0] = {sq * bessel_j(nu, y), ca, 0.0};
    m.eps.ch[1] = {sq * bessel_j(-nu, y), cb, 0.0};
    const double ja = dpre * bessel_j(nu - 1.0, y);
    const double jb = dpre * bessel_j(1.0 - nu, y);
    if (t < 0.0) {
      m.eps_dot.ch[0] = {-ja, ca, 0.0};
      m.eps_dot.ch[1] = {jb, cb, 0.0};
    } else {
      m.eps_dot.ch[0] = {ja, ca, 0.0};
      m.eps_dot.ch[1] = {-jb, cb, 0.0};
    }
    return m;
  }

  if (y <= kSplitY) {
    // Moderate y: plain (I_nu, I_{-nu}) basis, all scales representable.
    const double ey = std::exp(y);
    m.eps.ch[0] = {sq * bessel_i_scaled(nu, y) * ey, ca, 0.0};
    m.eps.ch[1] = {sq * bessel_i_scaled(-nu, y) * ey, cb, 0.0};
    m.eps_dot.ch[0] = {dpre * bessel_i_scaled(nu - 1.0, y) * ey, ca, 0.0};
    m.eps_dot.ch[1] = {dpre * bessel_i_scaled(1.0 - nu, y) * ey, cb, 0.0};
    return m;
  }

  // Dominant/recessive split: eps = C+ I_nu + D+ K_nu with
  // C+ = A+ + B+, D+ = (2 sin(nu pi)/pi) B+, E+ = (2 sin(nu pi)/pi) A+.
  const double two_sin = 2.0 * std::sin(nu * kPi) / kPi;
  const Complex cplus = ca + cb;
  const Complex dplus = two_sin * cb;
  const Complex eplus = two_sin * ca;
  m.eps.ch[0] = {sq * bessel_i_scaled(nu, y), cplus, y};
  m.eps.ch[1] = {sq * bessel_k_scaled(nu, y), dplus, -y};
  m.eps_dot.ch[0] = {dpre * bessel_i_scaled(1.0 - nu, y), cplus, y};
  m.eps_dot.ch[1] = {dpre * bessel_k_scaled(1.0 - nu, y), eplus, -y};
  return m;
}

}  // namespace detail

/// The mode at time t.  For power profiles t must be >= -tau.
/// Exponentially large values are carried in scaled channels; plain-value
/// export via eps_value() throws OverflowError past exp(700).
inline ClassicalMode mode_at(const FrequencyProfile& p, const TransitionCoefficients& tc,
                             double t) {
  switch (p.kind) {
    case ProfileKind::PowerCrossing:
    case ProfileKind::PowerRevival: {
      if (t < -1.0 - 1e-12)
        throw DomainError("mode_at: power profiles are defined for t >= -tau");
      return detail::power_mode(p, tc, t);
    }
    case ProfileKind::ConstantHarmonic: {
      ClassicalMode m;
      m.t = t;
      m.gamma = gamma_of_t(p, t);
      m.omega0 = p.omega0c;
      const double w0 = p.omega0c;
      const Complex phase = std::exp(Complex(0.0, w0 * (t + 1.0)));
      m.eps.ch[0] = {1.0 / std::sqrt(w0), phase, 0.0};
      m.eps_dot.ch[0] = {std::sqrt(w0), Complex(0.0, 1.0) * phase, 0.0};
      return m;
    }
    case ProfileKind::SuddenJump: {
      if (t < -1.0 - 1e-12)
        throw DomainError("mode_at: SuddenJump is defined for t >= -tau");
      ClassicalMode m;
      m.t = t;
      m.gamma = gamma_of_t(p, t);
      m.omega0 = 1.0;
      if (t < 0.0) {
        const Complex phase = std::exp(Complex(0.0, t + 1.0));
        m.eps.ch[0] = {1.0, phase, 0.0};
        m.eps_dot.ch[0] = {1.0, Complex(0.0, 1.0) * phase, 0.0};
        return m;
      }
      const double k = p.rho;
      m.eps.ch[0] = {1.0 / std::sqrt(2.0 * k), tc.v_plus, k * t};
      m.eps.ch[1] = {1.0 / std::sqrt(2.0 * k), tc.v_minus, -k * t};
      m.eps_dot.ch[0] = {std::sqrt(k / 2.0), tc.v_plus, k * t};
      m.eps_dot.ch[1] = {-std::sqrt(k / 2.0), tc.v_minus, -k * t};
      return m;
    }
    case ProfileKind::ConstantInverted: {
      const double im_cross = (tc.v_plus * std::conj(tc.v_minus)).imag();
      if (std::fabs(im_cross - 1.0) > 1e-10)
        throw PreconditionError("mode_at: ConstantInverted requires Im(v+ v-*) = 1");
      ClassicalMode m;
      m.t = t;
      m.gamma = gamma_of_t(p, t);
      m.omega0 = 1.0;
      const double k = p.kappa;
      m.eps.ch[0] = {1.0 / std::sqrt(2.0 * k), tc.v_plus, k * t};
      m.eps.ch[1] = {1.0 / std::sqrt(2.0 * k), tc.v_minus, -k * t};
      m.eps_dot.ch[0] = {std::sqrt(k / 2.0), tc.v_plus, k * t};
      m.eps_dot.ch[1] = {-std::sqrt(k / 2.0), tc.v_minus, -k * t};
      return m;
    }
  }
  throw DomainError("mode_at: unknown profile kind");
}

}  // namespace invosc
