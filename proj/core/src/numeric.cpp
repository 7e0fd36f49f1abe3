#include "supergroup/numeric.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace supergroup {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

Bits min_bits(const Real& a, const Real& b) { return std::min(a.bits(), b.bits()); }

}  // namespace

Real::Real(Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

Real::Real(const BigInt& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

Real::Real(const BigRational& value, Bits bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.bits());
  mpfr_set(value_, other.value_, kRound);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.bits());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::parse(std::string_view text, Bits bits) {
  std::string s(text);
  if (s.find('/') != std::string::npos) {
    BigRational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
      throw std::invalid_argument("malformed rational literal: " + s);
    }
    q.canonicalize();
    return Real(q, bits);
  }
  Real r(bits);
  char* end = nullptr;
  if (s.empty() || mpfr_strtofr(r.value_, s.c_str(), &end, 10, kRound), end == nullptr || *end != '\0' || end == s.c_str()) {
    throw std::invalid_argument("malformed decimal literal: " + s);
  }
  return r;
}

Real Real::rounded(Bits bits) const {
  Real r(bits);
  mpfr_set(r.value_, value_, kRound);
  return r;
}

long Real::magnitude_exponent() const {
  if (is_zero()) return LONG_MIN / 4;
  return mpfr_get_exp(value_);
}

std::string Real::to_string() const {
  return to_string(static_cast<int>(mpfr_get_str_ndigits(10, bits())));
}

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) { return *this = *this + rhs; }
Real& Real::operator-=(const Real& rhs) { return *this = *this - rhs; }
Real& Real::operator*=(const Real& rhs) { return *this = *this * rhs; }
Real& Real::operator/=(const Real& rhs) { return *this = *this / rhs; }

Real operator+(const Real& a, const Real& b) {
  Real r(min_bits(a, b));
  mpfr_add(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r(min_bits(a, b));
  mpfr_sub(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r(min_bits(a, b));
  mpfr_mul(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r(min_bits(a, b));
  mpfr_div(r.value_, a.value_, b.value_, kRound);
  return r;
}

Real operator-(const Real& a) {
  Real r(a.bits());
  mpfr_neg(r.value_, a.value_, kRound);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
  Real r(x.bits());
  mpfr_abs(r.raw(), x.raw(), kRound);
  return r;
}

Real sqrt(const Real& x) {
  Real r(x.bits());
  mpfr_sqrt(r.raw(), x.raw(), kRound);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r(std::min(x.bits(), y.bits()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), kRound);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, kRound);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Real& x) { return os << x.to_string(); }

BigComplex::BigComplex(Bits bits) : re_(bits), im_(bits) {
  if (bits < kMinComplexBits) throw std::invalid_argument("BigComplex precision must be at least 64 bits");
}

BigComplex::BigComplex(long re, Bits bits) : BigComplex(bits) { re_ = Real(re, bits); }

BigComplex::BigComplex(long re, long im, Bits bits) : BigComplex(bits) {
  re_ = Real(re, bits);
  im_ = Real(im, bits);
}

BigComplex::BigComplex(const BigRational& re, Bits bits) : BigComplex(bits) { re_ = Real(re, bits); }

BigComplex::BigComplex(const BigRational& re, const BigRational& im, Bits bits) : BigComplex(bits) {
  re_ = Real(re, bits);
  im_ = Real(im, bits);
}

BigComplex::BigComplex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
  if (bits() < kMinComplexBits) throw std::invalid_argument("BigComplex precision must be at least 64 bits");
}

BigComplex::BigComplex(Real re) : BigComplex(Real(re), Real(re.bits())) {}

BigComplex BigComplex::parse(std::string_view re, std::string_view im, Bits bits) {
  return {Real::parse(re, bits), Real::parse(im.empty() ? std::string_view("0") : im, bits)};
}

long BigComplex::magnitude_exponent() const { return std::max(re_.magnitude_exponent(), im_.magnitude_exponent()); }

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& rhs) { return *this = *this * rhs; }
BigComplex& BigComplex::operator/=(const BigComplex& rhs) { return *this = *this / rhs; }

BigComplex& BigComplex::operator*=(const Real& rhs) {
  re_ *= rhs;
  im_ *= rhs;
  return *this;
}

BigComplex& BigComplex::operator/=(const Real& rhs) {
  re_ /= rhs;
  im_ /= rhs;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  // Pure-real operands are common (rational eigenvalues, factorial weights).
  if (a.im_.is_zero() && b.im_.is_zero()) {
    return {a.re_ * b.re_, Real(std::min(a.bits(), b.bits()))};
  }
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.im_.is_zero()) {
    return {a.re_ / b.re_, a.im_ / b.re_};
  }
  const Real den = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / den, (a.im_ * b.re_ - a.re_ * b.im_) / den};
}

BigComplex conj(const BigComplex& z) { return {z.re(), -z.im()}; }

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1, z.bits()) / pow(z, -n);
  BigComplex result(1, z.bits());
  BigComplex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Real relative_difference(const BigComplex& a, const BigComplex& b) {
  const Real diff = (a - b).abs();
  Real scale = a.abs();
  const Real other = b.abs();
  if (other > scale) scale = other;
  if (scale.is_zero()) return diff;
  return diff / scale;
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << "(" << z.re().to_string(20) << ", " << z.im().to_string(20) << ")";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational r = re * o.re - im * o.im;
  BigRational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const BigRational den = o.re * o.re + o.im * o.im;
  if (sgn(den) == 0) throw std::domain_error("division by zero Gaussian rational");
  BigRational r = (re * o.re + im * o.im) / den;
  BigRational i = (im * o.re - re * o.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << "(" << z.re << ", " << z.im << ")"; }

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace supergroup
