#pragma once

// Continuous energy-spectrum probability densities P_n(E~; rho) of the
// inverted oscillator after a sudden jump from a Fock state |n>, with
// their quadrature moments, reciprocity symmetry, zero structure, and
// exponential tails.
//
// Assembly is done in log space (log-gamma + log polynomial magnitude +
// the linear 2 E~ Phi(rho) exponent) and exponentiated last, so values
// stay finite for |E~| far beyond the overflow range of Gamma itself.

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "invosc/errors.hpp"
#include "invosc/oracle.hpp"
#include "invosc/specfun.hpp"

namespace invosc::spectra {

using Complex = std::complex<double>;

inline constexpr int kMaxFockIndex = 128;  // k = n/2 <= 64 (hypergeometric cap)

struct SpectralParams {
  int n = 0;             // initial Fock index
  double rho = 1.0;      // kappa / omega0
  double phi = 0.0;      // Phi(rho) = pi/4 - atan(rho)
  Complex z_arg{2.0, 0.0};  // z(rho) = 4 i rho / (1 + i rho)^2

  int k() const { return n / 2; }
  bool even() const { return n % 2 == 0; }

  static SpectralParams make(int n, double rho) {
    if (n < 0 || n > kMaxFockIndex)
      throw CapError("SpectralParams: n must lie in [0, 128]");
    if (!(rho > 0.0)) throw DomainError("SpectralParams: rho must be > 0");
    SpectralParams p;
    p.n = n;
    p.rho = rho;
    p.phi = kPi / 4.0 - std::atan(rho);
    const Complex irho(0.0, rho);
    p.z_arg = 4.0 * irho / ((1.0 + irho) * (1.0 + irho));
    return p;
  }
};

namespace detail {

/// log of the rho-dependent prefactor of P_n.
inline double log_prefactor(const SpectralParams& p) {
  const int k = p.k();
  if (p.even()) {
    // Gamma(k+1/2) rho^{1/2} / (2 pi^2 k! (1+rho^2)^{1/2})
    return std::lgamma(k + 0.5) - std::lgamma(k + 1.0) - std::log(2.0) -
           2.0 * std::log(kPi) + 0.5 * std::log(p.rho) -
           0.5 * std::log1p(p.rho * p.rho);
  }
  // 8 Gamma(k+3/2) rho^{3/2} / (pi^2 k! (1+rho^2)^{3/2})
  return std::log(8.0) + std::lgamma(k + 1.5) - std::lgamma(k + 1.0) -
         2.0 * std::log(kPi) + 1.5 * std::log(p.rho) -
         1.5 * std::log1p(p.rho * p.rho);
}

/// The general-rho assembly.
inline double density_general(const SpectralParams& p, double e_tilde) {
  const double a = p.even() ? 0.25 : 0.75;
  const double c = p.even() ? 0.5 : 1.5;
  const Complex b(a, -0.5 * e_tilde);
  const Complex f = hyp_terminating(p.k(), b, c, p.z_arg);
  const double af = std::abs(f);
  if (af == 0.0) return 0.0;
  const double lg = log_gamma_complex(b).real();
  const double logp =
      log_prefactor(p) + 2.0 * e_tilde * p.phi + 2.0 * lg + 2.0 * std::log(af);
  return std::exp(logp);
}

/// The rho = 1 simplified printed forms (z = 2, no exponential tilt); an
/// independent route to the same values used as a cross-check.
inline double density_rho1(int n, double e_tilde) {
  const int k = n / 2;
  const bool even = (n % 2 == 0);
  const double a = even ? 0.25 : 0.75;
  const double c = even ? 0.5 : 1.5;
  const Complex b(a, -0.5 * e_tilde);
  const Complex f = hyp_terminating(k, b, c, {2.0, 0.0});
  const double af = std::abs(f);
  if (af == 0.0) return 0.0;
  const double log_pref =
      even ? std::lgamma(k + 0.5) - std::lgamma(k + 1.0) - 1.5 * std::log(2.0) -
                 2.0 * std::log(kPi)
           : 1.5 * std::log(2.0) + std::lgamma(k + 1.5) - std::lgamma(k + 1.0) -
                 2.0 * std::log(kPi);
  return std::exp(log_pref + 2.0 * log_gamma_complex(b).real() + 2.0 * std::log(af));
}

}  // namespace detail

/// P_n(E~; rho), the probability density of measuring scaled energy
/// E~ = E/kappa after the jump.  Nonnegative; n <= 128.
inline double density(const SpectralParams& p, double e_tilde) {
  if (p.rho == 1.0) return detail::density_rho1(p.n, e_tilde);
  return detail::density_general(p, e_tilde);
}

inline double density(int n, double rho, double e_tilde) {
  return density(SpectralParams::make(n, rho), e_tilde);
}

struct DensityMoments {
  double norm = 0.0;    // int P dE~
  double mean = 0.0;    // int E~ P dE~
  double second = 0.0;  // int E~^2 P dE~
};

/// Quadrature moments.  The window starts at |E~| = n + 40 (where the
/// rho = 1 envelope e^{-pi|E~|/2} is negligible) and is widened until the
/// E~^2-weighted density at each edge drops below 1e-16: for rho != 1 the
/// heavy-side tail only decays like e^{-(pi/2 - 2|Phi|)|E~|}.
inline DensityMoments density_moments(const SpectralParams& p, double tol = 1e-11) {
  double w_neg = p.n + 40.0, w_pos = p.n + 40.0;
  while (w_neg < 500.0 && (1.0 + w_neg * w_neg) * density(p, -w_neg) > 1e-16) w_neg += 10.0;
  while (w_pos < 500.0 && (1.0 + w_pos * w_pos) * density(p, w_pos) > 1e-16) w_pos += 10.0;
  const double split = p.n + 1.0;
  const std::vector<double> edges = {-w_neg, -split, 0.0, split, w_pos};
  DensityMoments out;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    out.norm +=
        oracle::quad_adaptive([&](double e) { return density(p, e); }, edges[i],
                              edges[i + 1], tol)
            .value;
    out.mean += oracle::quad_adaptive([&](double e) { return e * density(p, e); },
                                      edges[i], edges[i + 1], tol)
                    .value;
    out.second += oracle::quad_adaptive([&](double e) { return e * e * density(p, e); },
                                        edges[i], edges[i + 1], tol)
                      .value;
  }
  return out;
}

/// Closed-form targets for the quadrature moments (units of kappa):
/// mean = (2n+1)(1-rho^2)/(4 rho), second from the jump <E^2> formula.
inline double mean_closed_form(int n, double rho) {
  return (2.0 * n + 1.0) * (1.0 - rho * rho) / (4.0 * rho);
}
inline double second_moment_closed_form(int n, double rho) {
  const double r2 = rho * rho;
  return (3.0 * (2.0 * n * n + 2.0 * n + 1.0) * (1.0 + r2 * r2) -
          2.0 * r2 * (2.0 * n * n + 2.0 * n - 1.0)) /
         (16.0 * r2);
}

/// |P_n(E~; rho) - P_n(-E~; 1/rho)|; the reciprocity symmetry says this
/// vanishes identically.
inline double reciprocity_check(int n, double rho, double e_tilde) {
  return std::fabs(density(SpectralParams::make(n, rho), e_tilde) -
                   density(SpectralParams::make(n, 1.0 / rho), -e_tilde));
}

struct StructureReport {
  std::optional<int> zero_count;  // strict zeros on E~ > 0 (rho = 1 only)
  double last_max_location = 0.0;
  double tail_slope = 0.0;  // linear coefficient of log P on [n+5, n+20]
};

namespace detail {

/// At rho = 1 the polynomial factor is i^k times a real polynomial in E~;
/// this evaluates that real polynomial (the gamma magnitude never
/// vanishes, so its sign changes are the density zeros).
inline double real_polynomial_rho1(int n, double e_tilde) {
  const int k = n / 2;
  const bool even = (n % 2 == 0);
  const Complex b(even ? 0.25 : 0.75, -0.5 * e_tilde);
  const Complex f = hyp_terminating(k, b, even ? 0.5 : 1.5, {2.0, 0.0});
  // (-i)^k * f is real up to roundoff.
  switch (k & 3) {
    case 0: return f.real();
    case 1: return f.imag();
    case 2: return -f.real();
    default: return -f.imag();
  }
}

}  // namespace detail

/// Zero count (rho = 1 only), outermost-peak location, and fitted tail
/// slope of log P_n over [n+5, n+20].  The tail model is
/// c0 + c1 E~ + c2 ln E~ + c3/E~ (the density decays like a power-law
/// prefactor times exp(-pi E~/2), so the ln term absorbs the prefactor);
/// tail_slope reports c1.
inline StructureReport structure_report(const SpectralParams& p) {
  StructureReport rep;

  if (p.rho == 1.0) {
    const int k = p.k();
    const int grid = 40 * (k + 1);
    const double hi = p.n + 2.0;
    int count = 0;
    double prev_x = hi * 1e-9;
    double prev_q = detail::real_polynomial_rho1(p.n, prev_x);
    for (int i = 1; i <= grid; ++i) {
      const double x = hi * i / grid;
      const double q = detail::real_polynomial_rho1(p.n, x);
      if (prev_q == 0.0) {
        prev_q = q;
        prev_x = x;
        continue;
      }
      if (q != 0.0 && std::signbit(q) != std::signbit(prev_q)) {
        double lo = prev_x, up = x, ql = prev_q;
        while (up - lo > 1e-8) {
          const double mid = 0.5 * (lo + up);
          const double qm = detail::real_polynomial_rho1(p.n, mid);
          if (qm == 0.0) break;
          if (std::signbit(qm) == std::signbit(ql)) {
            lo = mid;
            ql = qm;
          } else {
            up = mid;
          }
        }
        ++count;
      }
      prev_q = q;
      prev_x = x;
    }
    rep.zero_count = count;
  }

  // Outermost peak: scan, then golden-section refine the last local max.
  {
    const int grid = 400 * (p.k() + 1) + 400;
    const double hi = p.n + 4.0;
    int last_max = -1;
    std::vector<double> vals(grid + 1);
    for (int i = 0; i <= grid; ++i) vals[i] = density(p, hi * i / grid);
    for (int i = 1; i < grid; ++i)
      if (vals[i] > vals[i - 1] && vals[i] >= vals[i + 1]) last_max = i;
    if (last_max > 0) {
      double a = hi * (last_max - 1) / grid, b = hi * (last_max + 1) / grid;
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      double c = b - gr * (b - a), d = a + gr * (b - a);
      for (int it = 0; it < 80; ++it) {
        if (density(p, c) > density(p, d))
          b = d;
        else
          a = c;
        c = b - gr * (b - a);
        d = a + gr * (b - a);
      }
      rep.last_max_location = 0.5 * (a + b);
    }
  }

  // Tail slope: least squares of log P against {1, E, ln E, 1/E}.
  {
    const int m = 60;
    double ata[4][4] = {};
    double atb[4] = {};
    for (int i = 0; i < m; ++i) {
      const double e = p.n + 5.0 + 15.0 * i / (m - 1.0);
      const double row[4] = {1.0, e, std::log(e), 1.0 / e};
      const double f = std::log(density(p, e));
      for (int r = 0; r < 4; ++r) {
        atb[r] += row[r] * f;
        for (int c = 0; c < 4; ++c) ata[r][c] += row[r] * row[c];
      }
    }
    // Gaussian elimination with partial pivoting on the 4x4 system.
    int idx[4] = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
      int piv = col;
      for (int r = col + 1; r < 4; ++r)
        if (std::fabs(ata[idx[r]][col]) > std::fabs(ata[idx[piv]][col])) piv = r;
      std::swap(idx[col], idx[piv]);
      for (int r = col + 1; r < 4; ++r) {
        const double f = ata[idx[r]][col] / ata[idx[col]][col];
        for (int c = col; c < 4; ++c) ata[idx[r]][c] -= f * ata[idx[col]][c];
        atb[idx[r]] -= f * atb[idx[col]];
      }
    }
    double sol[4];
    for (int r = 3; r >= 0; --r) {
      double s = atb[idx[r]];
      for (int c = r + 1; c < 4; ++c) s -= ata[idx[r]][c] * sol[c];
      sol[r] = s / ata[idx[r]][r];
    }
    rep.tail_slope = sol[1];
  }
  return rep;
}

}  // namespace invosc::spectra
