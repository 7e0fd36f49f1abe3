#pragma once

// Arbitrary-precision scalars: MPFR-backed reals and complex numbers, and
// GMP-backed exact integers, rationals and Gaussian rationals.

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace supergroup {

using BigInt = mpz_class;
using BigRational = mpq_class;
using Bits = mpfr_prec_t;

inline constexpr Bits kDefaultBits = 256;
inline constexpr Bits kMinComplexBits = 64;

/// Multiprecision real number. Binary operations produce a result carrying
/// the smaller precision of the two operands.
class Real {
 public:
  Real() : Real(kDefaultBits) {}
  explicit Real(Bits bits);
  Real(long value, Bits bits);
  Real(const BigInt& value, Bits bits);
  Real(const BigRational& value, Bits bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Accepts decimal/scientific notation ("1.25e-3") or an exact fraction ("1/3").
  static Real parse(std::string_view text, Bits bits);

  Bits bits() const { return mpfr_get_prec(value_); }
  /// Copy rounded to the requested precision.
  Real rounded(Bits bits) const;

  mpfr_srcptr raw() const { return value_; }
  mpfr_ptr raw() { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; a very negative value for zero.
  long magnitude_exponent() const;
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Shortest decimal scientific string that round-trips at this precision.
  std::string to_string() const;
  /// Scientific string with `digits` significant digits.
  std::string to_string(int digits) const;

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real hypot(const Real& x, const Real& y);
/// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real min_bits_copy(const Real& x, Bits bits);

std::ostream& operator<<(std::ostream& os, const Real& x);

/// Complex number with independent MPFR real and imaginary parts.
/// Invariant: precision_bits() >= 64.
class BigComplex {
 public:
  BigComplex() : BigComplex(kDefaultBits) {}
  explicit BigComplex(Bits bits);
  BigComplex(long re, Bits bits);
  BigComplex(long re, long im, Bits bits);
  BigComplex(const BigRational& re, Bits bits);
  BigComplex(const BigRational& re, const BigRational& im, Bits bits);
  BigComplex(Real re, Real im);
  explicit BigComplex(Real re);

  static BigComplex parse(std::string_view re, std::string_view im, Bits bits);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Bits bits() const { return std::min(re_.bits(), im_.bits()); }
  BigComplex rounded(Bits bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  /// Cheap log2-scale magnitude: exponent of max(|re|, |im|).
  long magnitude_exponent() const;
  Real abs() const { return hypot(re_, im_); }

  BigComplex& operator+=(const BigComplex& rhs);
  BigComplex& operator-=(const BigComplex& rhs);
  BigComplex& operator*=(const BigComplex& rhs);
  BigComplex& operator/=(const BigComplex& rhs);
  BigComplex& operator*=(const Real& rhs);
  BigComplex& operator/=(const Real& rhs);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(BigComplex a, const Real& b) { return a *= b; }
  friend BigComplex operator*(const Real& b, BigComplex a) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const Real& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }

  /// Bit-identical comparison (used for confluent dispatch).
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

BigComplex conj(const BigComplex& z);
BigComplex pow(const BigComplex& z, long n);
/// |a - b| / max(|a|, |b|), or |a - b| when both vanish.
Real relative_difference(const BigComplex& a, const BigComplex& b);
std::ostream& operator<<(std::ostream& os, const BigComplex& z);

/// Exact complex rational a + b i.
struct GaussianRational {
  BigRational re;
  BigRational im;

  GaussianRational() = default;
  GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational r, BigRational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {BigRational(-a.re), BigRational(-a.im)}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }

  BigComplex to_complex(Bits bits) const { return {re, im, bits}; }
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

BigInt factorial(long n);

/// num/den in lowest terms (gmpxx does not canonicalize on construction).
inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

// Uniform scalar vocabulary used by the generic (exact or multiprecision) code paths.

inline BigComplex scalar_from(long v, const BigComplex& like) { return {v, like.bits()}; }
inline BigComplex scalar_from(const BigRational& v, const BigComplex& like) { return {v, like.bits()}; }
inline BigRational scalar_from(long v, const BigRational&) { return BigRational(v); }
inline BigRational scalar_from(const BigRational& v, const BigRational&) { return v; }
inline GaussianRational scalar_from(long v, const GaussianRational&) { return GaussianRational(v); }
inline GaussianRational scalar_from(const BigRational& v, const GaussianRational&) { return GaussianRational(v); }

inline bool is_zero(const BigComplex& z) { return z.is_zero(); }
inline bool is_zero(const BigRational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& z) { return sgn(z.re) == 0 && sgn(z.im) == 0; }

inline BigRational conj(const BigRational& q) { return q; }
inline GaussianRational conj(const GaussianRational& z) { return {z.re, BigRational(-z.im)}; }

/// Imaginary unit in the scalar kind of `like`.
inline BigComplex imaginary_unit(const BigComplex& like) { return {0, 1, like.bits()}; }
inline GaussianRational imaginary_unit(const GaussianRational&) { return {0, 1}; }

}  // namespace supergroup
