#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "invosc/errors.hpp"

namespace invosc {

/// Largest |log value| that still folds into a finite, normal double.
inline constexpr double kPlainExportLogLimit = 700.0;

/// A real number stored as mant * exp(log_scale).
///
/// The inverted-oscillator regime produces quantities that grow like
/// exp(2y) with y up to several hundred, far past double range.  All such
/// quantities are carried in this form; value() folds the exponent back in
/// and fails loudly when the result would not be representable.
struct ScaledReal {
  double mant = 0.0;
  double log_scale = 0.0;

  static ScaledReal from_value(double v) { return {v, 0.0}; }

  /// Keeps |mant| in [1, e) (or 0) so log_scale stays meaningful.
  ScaledReal normalized() const {
    if (mant == 0.0 || !std::isfinite(mant)) return {mant, 0.0};
    const double s = std::log(std::fabs(mant));
    return {mant / std::exp(s), log_scale + s};
  }

  double value() const {
    if (mant == 0.0) return 0.0;
    const double total = log_scale + std::log(std::fabs(mant));
    if (total > kPlainExportLogLimit)
      throw OverflowError("ScaledReal::value: |log value| = " + std::to_string(total) +
                          " exceeds plain-double export range");
    return std::copysign(std::exp(total), mant);
  }

  /// Folds as far as a finite double allows; never throws, never returns inf.
  /// If folding would overflow, the exponent remainder is left in log_scale.
  ScaledReal folded() const {
    if (mant == 0.0) return {0.0, 0.0};
    const double total = log_scale + std::log(std::fabs(mant));
    if (std::fabs(total) <= kPlainExportLogLimit)
      return {std::copysign(std::exp(total), mant), 0.0};
    const ScaledReal n = normalized();
    return n;
  }

  ScaledReal operator*(const ScaledReal& o) const {
    return ScaledReal{mant * o.mant, log_scale + o.log_scale}.normalized();
  }
  ScaledReal operator*(double f) const { return ScaledReal{mant * f, log_scale}.normalized(); }
  ScaledReal operator-() const { return {-mant, log_scale}; }

  ScaledReal operator+(const ScaledReal& o) const {
    if (mant == 0.0) return o;
    if (o.mant == 0.0) return *this;
    const ScaledReal a = normalized(), b = o.normalized();
    if (a.log_scale >= b.log_scale) {
      const double shift = b.log_scale - a.log_scale;
      return ScaledReal{a.mant + b.mant * std::exp(shift), a.log_scale}.normalized();
    }
    const double shift = a.log_scale - b.log_scale;
    return ScaledReal{a.mant * std::exp(shift) + b.mant, b.log_scale}.normalized();
  }
  ScaledReal operator-(const ScaledReal& o) const { return *this + (-o); }
};

/// A complex number stored as mant * exp(log_scale) with real log_scale.
struct ScaledComplex {
  std::complex<double> mant{0.0, 0.0};
  double log_scale = 0.0;

  ScaledComplex normalized() const {
    const double a = std::abs(mant);
    if (a == 0.0 || !std::isfinite(a)) return {mant, 0.0};
    const double s = std::log(a);
    return {mant / std::exp(s), log_scale + s};
  }

  std::complex<double> value() const {
    const double a = std::abs(mant);
    if (a == 0.0) return {0.0, 0.0};
    const double total = log_scale + std::log(a);
    if (total > kPlainExportLogLimit)
      throw OverflowError("ScaledComplex::value: |log value| = " + std::to_string(total) +
                          " exceeds plain-double export range");
    return mant * std::exp(log_scale);
  }
};

/// sum_i mant_i * exp(scale_i) as a ScaledReal, aligned to the largest scale
/// seen so far.  Terms far below the top underflow harmlessly to zero.
class ScaledAccumulator {
 public:
  void add(double mant, double scale) {
    if (mant == 0.0) return;
    if (terms_ == 0) {
      top_ = scale;
    } else if (scale > top_) {
      sum_ *= std::exp(top_ - scale);
      top_ = scale;
    }
    sum_ += mant * std::exp(scale - top_);
    ++terms_;
  }

  ScaledReal result() const {
    if (terms_ == 0) return {0.0, 0.0};
    return {sum_, top_};
  }

 private:
  double sum_ = 0.0;
  double top_ = 0.0;
  int terms_ = 0;
};

}  // namespace invosc
