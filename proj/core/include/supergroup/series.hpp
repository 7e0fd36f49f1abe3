#pragma once

// Adaptive evaluation of the modified-Bessel type power series used by the
// integral formulas. Everything is expressed in the squared variable.

#include <functional>
#include <optional>

#include "supergroup/numeric.hpp"

namespace supergroup {

struct Precision {
  Bits bits = kDefaultBits;
  long guard_bits = 32;
  long truncation_cap = 512;

  /// Throws std::invalid_argument if bits < 64, guard_bits < 0 or truncation_cap < 8.
  void validate() const;
  Bits working_bits() const { return bits + guard_bits; }
  /// Same settings with `bits` raised by the guard, for internal intermediate work.
  Precision widened() const { return {working_bits(), guard_bits, truncation_cap}; }

  /// Defaults, with `bits` taken from SUPERGROUP_PREC_BITS when it is set and valid.
  static Precision from_environment();
};

/// Number of terms consumed by the last series evaluation, for diagnostics.
struct SeriesStats {
  long terms = 0;
};

/// Sums next(k) for k = first, first+1, ... with the adaptive stopping rule:
/// stop once |term| < 2^-(bits+guard) * max |partial sum| and the terms are
/// decreasing. Throws TruncationCapExceeded after truncation_cap terms.
BigComplex sum_series(const std::function<BigComplex(long)>& next, long first, const Precision& prec,
                      SeriesStats* stats = nullptr);

/// Power series sum_{k>=offset} c_k x^k with c_offset = lead and
/// c_{k+1} = c_k * multiplier / denominator(k).
class HypergeometricSeries {
 public:
  HypergeometricSeries(long offset, BigComplex lead, BigComplex multiplier, std::function<long(long)> denominator);

  long offset() const { return offset_; }
  BigComplex evaluate(const BigComplex& x, const Precision& prec, SeriesStats* stats = nullptr) const;
  /// f^(t)(x) / t!.
  BigComplex taylor_coefficient(long t, const BigComplex& x, const Precision& prec,
                                SeriesStats* stats = nullptr) const;
  /// Exact coefficient c_k (k < offset gives 0).
  BigComplex coefficient(long k, Bits bits) const;

 private:
  long offset_;
  BigComplex lead_;
  BigComplex multiplier_;
  std::function<long(long)> denominator_;
};

/// sum_k w^k / (k! (k+nu)!).
BigComplex bessel_ratio(long nu, const BigComplex& w, const Precision& prec, SeriesStats* stats = nullptr);

/// beta^nu x^nu bessel_ratio(nu, beta^2 x), i.e. lambda^nu I_nu(2 beta lambda) at x = lambda^2.
BigComplex scaled_bessel_entry(long nu, const BigComplex& beta, const BigComplex& lambda_sq, const Precision& prec,
                               SeriesStats* stats = nullptr);

/// scaled_bessel_entry(nu, beta, x) as a power series in x.
HypergeometricSeries scaled_bessel_series(long nu, const BigComplex& beta, Bits bits);

/// bessel_ratio(0, beta^2 x y) as a power series in x at fixed y.
HypergeometricSeries bk_entry_series(const BigComplex& beta, const BigComplex& y, Bits bits);

/// d^s/dx^s d^t/dy^t bessel_ratio(0, beta^2 x y) / (s! t!).
BigComplex bk_mixed_taylor(long s, long t, const BigComplex& beta, const BigComplex& x, const BigComplex& y,
                           const Precision& prec, SeriesStats* stats = nullptr);

}  // namespace supergroup
