#include "supergroup/series.hpp"

#include <climits>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "supergroup/errors.hpp"

namespace supergroup {

namespace {

BigInt binomial(long n, long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigComplex from_int(const BigInt& v, Bits bits) { return {BigRational(v), bits}; }

}  // namespace

void Precision::validate() const {
  if (bits < kMinComplexBits) throw std::invalid_argument("precision must be at least 64 bits");
  if (guard_bits < 0) throw std::invalid_argument("guard bits must be non-negative");
  if (truncation_cap < 8) throw std::invalid_argument("truncation cap must be at least 8");
}

Precision Precision::from_environment() {
  Precision p;
  if (const char* env = std::getenv("SUPERGROUP_PREC_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= kMinComplexBits) p.bits = v;
  }
  return p;
}

BigComplex sum_series(const std::function<BigComplex(long)>& next, long first, const Precision& prec,
                      SeriesStats* stats) {
  const long tolerance_exp = prec.bits + prec.guard_bits;
  BigComplex sum(prec.working_bits());
  long max_exp = LONG_MIN / 4;
  long prev_exp = LONG_MAX;
  for (long i = 0;; ++i) {
    if (i >= prec.truncation_cap) {
      throw TruncationCapExceeded("series did not converge within " + std::to_string(prec.truncation_cap) +
                                  " terms");
    }
    const BigComplex term = next(first + i);
    sum += term;
    max_exp = std::max(max_exp, sum.magnitude_exponent());
    const long term_exp = term.magnitude_exponent();
    if (term.is_zero() || (term_exp < max_exp - tolerance_exp && term_exp < prev_exp)) {
      if (stats) stats->terms = i + 1;
      return sum;
    }
    prev_exp = term_exp;
  }
}

HypergeometricSeries::HypergeometricSeries(long offset, BigComplex lead, BigComplex multiplier,
                                           std::function<long(long)> denominator)
    : offset_(offset), lead_(std::move(lead)), multiplier_(std::move(multiplier)), denominator_(std::move(denominator)) {
  if (offset < 0) throw std::invalid_argument("series offset must be non-negative");
}

BigComplex HypergeometricSeries::coefficient(long k, Bits bits) const {
  if (k < offset_) return BigComplex(bits);
  BigComplex c = lead_.rounded(bits);
  const BigComplex mult = multiplier_.rounded(bits);
  for (long j = offset_; j < k; ++j) {
    c *= mult;
    c /= Real(denominator_(j), bits);
  }
  return c;
}

BigComplex HypergeometricSeries::evaluate(const BigComplex& x, const Precision& prec, SeriesStats* stats) const {
  return taylor_coefficient(0, x, prec, stats);
}

BigComplex HypergeometricSeries::taylor_coefficient(long t, const BigComplex& x, const Precision& prec,
                                                    SeriesStats* stats) const {
  if (t < 0) throw std::invalid_argument("negative Taylor order");
  const Bits w = prec.working_bits();
  if (x.is_zero()) {
    if (stats) stats->terms = 1;
    return coefficient(t, w).rounded(prec.bits);
  }
  const long k0 = std::max(offset_, t);
  const BigComplex xw = x.rounded(w);
  const BigComplex step = multiplier_.rounded(w) * xw;
  BigComplex term = coefficient(k0, w) * pow(xw, k0 - t) * from_int(binomial(k0, t), w);
  const auto next = [&](long k) {
    if (k > k0) {
      // term_k = term_{k-1} * k/(k-t) * multiplier * x / den(k-1)
      term *= step;
      BigRational r(k, (k - t) * denominator_(k - 1));
      r.canonicalize();
      term *= Real(r, w);
    }
    return term;
  };
  return sum_series(next, k0, prec, stats).rounded(prec.bits);
}

BigComplex bessel_ratio(long nu, const BigComplex& w, const Precision& prec, SeriesStats* stats) {
  if (nu < 0) throw std::invalid_argument("bessel_ratio needs nu >= 0");
  const Bits wb = prec.working_bits();
  const HypergeometricSeries series(0, BigComplex(BigRational(1, factorial(nu)), wb), BigComplex(1, wb),
                                    [nu](long k) { return (k + 1) * (k + 1 + nu); });
  return series.evaluate(w, prec, stats);
}

BigComplex scaled_bessel_entry(long nu, const BigComplex& beta, const BigComplex& lambda_sq, const Precision& prec,
                               SeriesStats* stats) {
  if (nu < 0) throw std::invalid_argument("scaled_bessel_entry needs nu >= 0");
  if (nu == 0) return bessel_ratio(0, beta * beta * lambda_sq, prec, stats);
  const Bits wb = prec.working_bits();
  const BigComplex b = beta.rounded(wb);
  const BigComplex x = lambda_sq.rounded(wb);
  const BigComplex inner = bessel_ratio(nu, b * b * x, prec.widened(), stats);
  return (pow(b * x, nu) * inner).rounded(prec.bits);
}

HypergeometricSeries scaled_bessel_series(long nu, const BigComplex& beta, Bits bits) {
  const BigComplex b = beta.rounded(bits);
  BigComplex lead = pow(b, nu) / Real(factorial(nu), bits);
  return {nu, std::move(lead), b * b, [nu](long k) { return (k + 1 - nu) * (k + 1); }};
}

HypergeometricSeries bk_entry_series(const BigComplex& beta, const BigComplex& y, Bits bits) {
  const BigComplex b = beta.rounded(bits);
  return {0, BigComplex(1, bits), b * b * y.rounded(bits), [](long k) { return (k + 1) * (k + 1); }};
}

BigComplex bk_mixed_taylor(long s, long t, const BigComplex& beta, const BigComplex& x, const BigComplex& y,
                           const Precision& prec, SeriesStats* stats) {
  if (s < 0 || t < 0) throw std::invalid_argument("negative Taylor order");
  const Bits w = prec.working_bits();
  const BigComplex b2 = beta.rounded(w) * beta.rounded(w);
  const BigComplex xw = x.rounded(w);
  const BigComplex yw = y.rounded(w);
  const auto term = [&](long k) {
    const BigInt f = factorial(k);
    BigRational weight(binomial(k, s) * binomial(k, t), f * f);
    weight.canonicalize();
    return pow(b2, k) * pow(xw, k - s) * pow(yw, k - t) * Real(weight, w);
  };
  return sum_series(term, std::max(s, t), prec, stats).rounded(prec.bits);
}

}  // namespace supergroup
