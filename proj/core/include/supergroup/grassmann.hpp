#pragma once

// Finite Grassmann algebra over exact or multiprecision coefficients, Berezin
// integration, even-element calculus and block supermatrices.
//
// Generators are numbered 0..g-1 in pairs (chi_k, chi_k^*) = (2k, 2k+1); a monomial is a
// bitmask with its generators in ascending order.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "supergroup/errors.hpp"
#include "supergroup/linalg.hpp"
#include "supergroup/numeric.hpp"
#include "supergroup/series.hpp"

namespace supergroup {

using Monomial = std::uint32_t;

inline constexpr int kMaxGenerators = 30;

namespace detail {

// Sign of bringing the concatenation (a, b) of two ascending monomials into ascending order.
inline int merge_sign(Monomial a, Monomial b) {
  int swaps = 0;
  while (b != 0) {
    const int y = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (y + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace detail

template <class T>
class GrassmannElement {
 public:
  /// Zero element; `unit` fixes the scalar kind (and precision for BigComplex).
  GrassmannElement(int generators, T unit) : generators_(generators), unit_(std::move(unit)) {
    if (generators < 0 || generators > kMaxGenerators || generators % 2 != 0) {
      throw std::invalid_argument("generator count must be even and at most 30");
    }
  }

  static GrassmannElement constant(int generators, const T& value) {
    GrassmannElement x(generators, scalar_from(1, value));
    x.add_term(0, value);
    return x;
  }

  static GrassmannElement generator(int generators, int index, const T& unit) {
    if (index < 0 || index >= generators) throw std::out_of_range("generator index out of range");
    GrassmannElement x(generators, unit);
    x.add_term(Monomial{1} << index, unit);
    return x;
  }

  int generator_count() const { return generators_; }
  const T& unit() const { return unit_; }
  const std::map<Monomial, T>& terms() const { return terms_; }

  T coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero() : it->second;
  }
  T body() const { return coefficient(0); }
  GrassmannElement soul() const {
    GrassmannElement s = *this;
    s.terms_.erase(0);
    return s;
  }
  T zero() const { return unit_ - unit_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_even() const {
    for (const auto& [m, c] : terms_) {
      if (std::popcount(m) % 2 != 0) return false;
    }
    return true;
  }
  bool is_odd() const {
    for (const auto& [m, c] : terms_) {
      if (std::popcount(m) % 2 == 0) return false;
    }
    return true;
  }

  /// Adds c to the coefficient of m, dropping it if the sum vanishes.
  void add_term(Monomial m, const T& c) {
    if (supergroup::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (supergroup::is_zero(it->second)) terms_.erase(it);
    }
  }

  GrassmannElement& operator+=(const GrassmannElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GrassmannElement& operator-=(const GrassmannElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  GrassmannElement& operator*=(const T& s) {
    if (supergroup::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator-(GrassmannElement a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend GrassmannElement operator*(GrassmannElement a, const T& s) { return a *= s; }
  friend GrassmannElement operator*(const T& s, GrassmannElement a) { return a *= s; }

  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
    a.check(b);
    GrassmannElement out(a.generators_, a.unit_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if ((ma & mb) != 0) continue;
        T c = ca * cb;
        if (detail::merge_sign(ma, mb) < 0) c = -c;
        out.add_term(ma | mb, c);
      }
    }
    return out;
  }
  GrassmannElement& operator*=(const GrassmannElement& o) { return *this = *this * o; }

  friend bool operator==(const GrassmannElement& a, const GrassmannElement& b) {
    return a.generators_ == b.generators_ && a.terms_ == b.terms_;
  }

  /// Debug form: "c0 + c1*[0,3] + ...".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      std::ostringstream os;
      os << c;
      out += os.str();
      if (m != 0) {
        out += "*[";
        bool first = true;
        for (int i = 0; i < generators_; ++i) {
          if ((m >> i) & 1U) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
          }
        }
        out += "]";
      }
    }
    return out;
  }

 private:
  void check(const GrassmannElement& o) const {
    if (o.generators_ != generators_) throw GeneratorMismatch("elements have different generator counts");
  }

  int generators_;
  T unit_;
  std::map<Monomial, T> terms_;
};

/// Index of the starred partner of a generator (2k <-> 2k+1).
inline int star_partner(int index) { return index ^ 1; }

/// Antilinear involution with (x y)^* = y^* x^* and (chi^*)^* = chi.
template <class T>
GrassmannElement<T> conjugate(const GrassmannElement<T>& x) {
  const int g = x.generator_count();
  GrassmannElement<T> out(g, x.unit());
  for (const auto& [m, c] : x.terms()) {
    GrassmannElement<T> term = GrassmannElement<T>::constant(g, conj(c));
    // generators of m in descending order, each replaced by its partner
    for (int i = g - 1; i >= 0; --i) {
      if ((m >> i) & 1U) term = term * GrassmannElement<T>::generator(g, star_partner(i), x.unit());
    }
    out += term;
  }
  return out;
}

/// Iterated Berezin integral  int d chi_{order[0]} ... d chi_{order[k-1]} x, innermost (last) first,
/// with int d chi chi = 1 and int d chi 1 = 0.
template <class T>
GrassmannElement<T> berezin_integrate(const GrassmannElement<T>& x, const std::vector<int>& order) {
  GrassmannElement<T> current = x;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int g = *it;
    if (g < 0 || g >= x.generator_count()) throw std::out_of_range("integration variable out of range");
    const Monomial bit = Monomial{1} << g;
    GrassmannElement<T> next(x.generator_count(), x.unit());
    for (const auto& [m, c] : current.terms()) {
      if ((m & bit) == 0) continue;
      // move chi_g to the front past the generators that precede it
      const int before = std::popcount(m & (bit - 1));
      next.add_term(m & ~bit, before % 2 == 0 ? c : -c);
    }
    current = std::move(next);
  }
  return current;
}

/// Integer powers of an element (p >= 0).
template <class T>
GrassmannElement<T> power(const GrassmannElement<T>& x, long p) {
  GrassmannElement<T> out = GrassmannElement<T>::constant(x.generator_count(), x.unit());
  for (long i = 0; i < p; ++i) {
    out = out * x;
    if (out.is_zero()) break;
  }
  return out;
}

/// f(body + soul) = sum_j taylor(j, body) soul^j, where taylor(j, b) = f^(j)(b)/j!.
/// Terminates at soul degree g/2. Throws std::invalid_argument if w is not even.
template <class T>
GrassmannElement<T> analytic_eval(const std::function<T(long, const T&)>& taylor, const GrassmannElement<T>& w) {
  if (!w.is_even()) throw std::invalid_argument("analytic_eval needs an even element");
  const T b = w.body();
  const GrassmannElement<T> s = w.soul();
  GrassmannElement<T> result = GrassmannElement<T>::constant(w.generator_count(), taylor(0, b));
  GrassmannElement<T> s_power = GrassmannElement<T>::constant(w.generator_count(), w.unit());
  for (long j = 1; j <= w.generator_count() / 2; ++j) {
    s_power = s_power * s;
    if (s_power.is_zero()) break;
    result += s_power * taylor(j, b);
  }
  return result;
}

inline GrassmannElement<BigComplex> analytic_eval(const HypergeometricSeries& f, const GrassmannElement<BigComplex>& w,
                                                  const Precision& prec) {
  return analytic_eval<BigComplex>([&](long j, const BigComplex& b) { return f.taylor_coefficient(j, b, prec); }, w);
}

/// Neumann series sum_j (-soul)^j / body^{j+1}. Throws NonInvertibleBody for a vanishing body.
template <class T>
GrassmannElement<T> even_inverse(const GrassmannElement<T>& w) {
  if (!w.is_even()) throw std::invalid_argument("even_inverse needs an even element");
  const T b = w.body();
  if (is_zero(b)) throw NonInvertibleBody("element has zero body");
  const T inv = w.unit() / b;
  const GrassmannElement<T> ratio = w.soul() * (-inv);
  GrassmannElement<T> result = GrassmannElement<T>::constant(w.generator_count(), inv);
  GrassmannElement<T> r_power = GrassmannElement<T>::constant(w.generator_count(), w.unit());
  for (long j = 1; j <= w.generator_count() / 2; ++j) {
    r_power = r_power * ratio;
    if (r_power.is_zero()) break;
    result += r_power * inv;
  }
  return result;
}

template <class T>
bool is_zero(const GrassmannElement<T>& x) {
  return x.is_zero();
}

/// (m|n) block supermatrix with Grassmann entries.
template <class T>
struct SuperMatrix {
  long m = 0;
  long n = 0;
  Matrix<GrassmannElement<T>> entries;

  SuperMatrix(long m_, long n_, int generators, const T& unit)
      : m(m_), n(n_), entries(m_ + n_, m_ + n_, GrassmannElement<T>(generators, unit)) {}

  long size() const { return m + n; }
  GrassmannElement<T>& operator()(long i, long j) { return entries(i, j); }
  const GrassmannElement<T>& operator()(long i, long j) const { return entries(i, j); }
  int generator_count() const { return entries(0, 0).generator_count(); }
  const T& unit() const { return entries(0, 0).unit(); }

  static SuperMatrix identity(long m, long n, int generators, const T& unit) {
    SuperMatrix out(m, n, generators, unit);
    for (long i = 0; i < m + n; ++i) out(i, i) = GrassmannElement<T>::constant(generators, unit);
    return out;
  }

  /// Boson-boson and fermion-fermion blocks even, off-diagonal blocks odd.
  bool grading_consistent() const {
    for (long i = 0; i < size(); ++i) {
      for (long j = 0; j < size(); ++j) {
        const bool diagonal_block = (i < m) == (j < m);
        if (diagonal_block ? !entries(i, j).is_even() : !entries(i, j).is_odd()) return false;
      }
    }
    return true;
  }

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.m != b.m || a.n != b.n) throw std::invalid_argument("supermatrix block shapes differ");
    SuperMatrix out(a.m, a.n, a.generator_count(), a.unit());
    for (long i = 0; i < a.size(); ++i) {
      for (long k = 0; k < a.size(); ++k) {
        if (a(i, k).is_zero()) continue;
        for (long j = 0; j < a.size(); ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }
  friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) {
    for (long i = 0; i < a.size(); ++i) {
      for (long j = 0; j < a.size(); ++j) a(i, j) += b(i, j);
    }
    return a;
  }
  friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) {
    for (long i = 0; i < a.size(); ++i) {
      for (long j = 0; j < a.size(); ++j) a(i, j) -= b(i, j);
    }
    return a;
  }
  SuperMatrix scaled(const T& s) const {
    SuperMatrix out = *this;
    for (long i = 0; i < size(); ++i) {
      for (long j = 0; j < size(); ++j) out(i, j) *= s;
    }
    return out;
  }
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
    if (a.m != b.m || a.n != b.n) return false;
    for (long i = 0; i < a.size(); ++i) {
      for (long j = 0; j < a.size(); ++j) {
        if (!(a(i, j) == b(i, j))) return false;
      }
    }
    return true;
  }

  /// Square sub-block [first, first+len) x [first, first+len) as an ordinary matrix.
  Matrix<GrassmannElement<T>> block(long first, long len) const {
    Matrix<GrassmannElement<T>> out(len, len, GrassmannElement<T>(generator_count(), unit()));
    for (long i = 0; i < len; ++i) {
      for (long j = 0; j < len; ++j) out(i, j) = entries(first + i, first + j);
    }
    return out;
  }
};

/// Entry-wise conjugate of the transpose.
template <class T>
SuperMatrix<T> conjugate_transpose(const SuperMatrix<T>& a) {
  SuperMatrix<T> out(a.m, a.n, a.generator_count(), a.unit());
  for (long i = 0; i < a.size(); ++i) {
    for (long j = 0; j < a.size(); ++j) out(i, j) = conjugate(a(j, i));
  }
  return out;
}

/// tr(boson block) - tr(fermion block).
template <class T>
GrassmannElement<T> supertrace(const SuperMatrix<T>& a) {
  GrassmannElement<T> out(a.generator_count(), a.unit());
  for (long i = 0; i < a.m; ++i) out += a(i, i);
  for (long j = a.m; j < a.size(); ++j) out -= a(j, j);
  return out;
}

/// Determinant of a matrix with pairwise commuting (even) entries, by Laplace expansion.
template <class T>
GrassmannElement<T> even_determinant(const Matrix<GrassmannElement<T>>& a) {
  if (a.rows() == 0) throw std::invalid_argument("empty matrix");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).is_even()) throw std::invalid_argument("even_determinant needs even entries");
    }
  }
  return determinant_cofactor(a);
}

/// Inverse of a matrix with even entries via the adjugate.
template <class T>
Matrix<GrassmannElement<T>> even_matrix_inverse(const Matrix<GrassmannElement<T>>& a) {
  const std::size_t n = a.rows();
  const GrassmannElement<T> inv_det = even_inverse(even_determinant(a));
  Matrix<GrassmannElement<T>> out = a;
  if (n == 1) {
    out(0, 0) = inv_det;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GrassmannElement<T> cof = determinant_cofactor(a.minor(j, i)) * inv_det;
      out(i, j) = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return out;
}

/// det(A - B D^{-1} C) / det(D). Throws NonInvertibleBody when D is not invertible.
template <class T>
GrassmannElement<T> superdeterminant(const SuperMatrix<T>& s) {
  const int g = s.generator_count();
  if (s.n == 0) return even_determinant(s.block(0, s.m));
  const Matrix<GrassmannElement<T>> d_inv = even_matrix_inverse(s.block(s.m, s.n));
  const GrassmannElement<T> det_d_inv = even_inverse(even_determinant(s.block(s.m, s.n)));
  if (s.m == 0) return det_d_inv;
  Matrix<GrassmannElement<T>> schur = s.block(0, s.m);
  for (long i = 0; i < s.m; ++i) {
    for (long j = 0; j < s.m; ++j) {
      GrassmannElement<T> acc(g, s.unit());
      for (long k = 0; k < s.n; ++k) {
        for (long l = 0; l < s.n; ++l) acc += s(i, s.m + k) * d_inv(k, l) * s(s.m + l, j);
      }
      schur(i, j) -= acc;
    }
  }
  return even_determinant(schur) * det_d_inv;
}

/// exp of the odd block matrix with X[i][m+j] = i alpha_ij and X[m+j][i] = i alpha*_ij.
template <class T>
SuperMatrix<T> exp_odd_block(const Matrix<GrassmannElement<T>>& alpha, const Matrix<GrassmannElement<T>>& alpha_star) {
  const long m = static_cast<long>(alpha.rows());
  const long n = static_cast<long>(alpha.cols());
  const int g = alpha(0, 0).generator_count();
  const T unit = alpha(0, 0).unit();
  const T i_unit = imaginary_unit(unit);
  SuperMatrix<T> x(m, n, g, unit);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      if (!alpha(i, j).is_odd() || !alpha_star(i, j).is_odd()) throw std::invalid_argument("exp_odd_block needs odd entries");
      x(i, m + j) = alpha(i, j) * i_unit;
      x(m + j, i) = alpha_star(i, j) * i_unit;
    }
  }
  SuperMatrix<T> result = SuperMatrix<T>::identity(m, n, g, unit);
  SuperMatrix<T> term = result;
  for (long k = 1; k <= 2 * m * n; ++k) {
    term = (term * x).scaled(unit / scalar_from(k, unit));
    result = result + term;
  }
  return result;
}

/// Generator index of alpha_ij (starred partner is +1), row-major over the m x n block.
inline int odd_generator_index(long i, long j, long n) { return static_cast<int>(2 * (i * n + j)); }

/// exp_odd_block over the standard generators alpha_ij, alpha*_ij (2mn generators).
template <class T>
SuperMatrix<T> exp_odd_block(long m, long n, const T& unit) {
  const int g = static_cast<int>(2 * m * n);
  Matrix<GrassmannElement<T>> alpha(m, n, GrassmannElement<T>(g, unit));
  Matrix<GrassmannElement<T>> alpha_star = alpha;
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      alpha(i, j) = GrassmannElement<T>::generator(g, odd_generator_index(i, j, n), unit);
      alpha_star(i, j) = GrassmannElement<T>::generator(g, odd_generator_index(i, j, n) + 1, unit);
    }
  }
  return exp_odd_block(alpha, alpha_star);
}

template <class T>
struct Diagonalization1p1 {
  SuperMatrix<T> v;
  SuperMatrix<T> diagonal;
  SuperMatrix<T> v_inv;
};

/// M = [[a, alpha], [beta, b]] = V^{-1} M_D V with M_D = diag(a + alpha beta/(a-b), b + alpha beta/(a-b)).
/// Throws NonInvertibleBody when a - b has zero body.
template <class T>
Diagonalization1p1<T> diagonalize_1p1(const SuperMatrix<T>& mat) {
  if (mat.m != 1 || mat.n != 1) throw std::invalid_argument("diagonalize_1p1 needs a (1|1) supermatrix");
  if (!mat.grading_consistent()) throw std::invalid_argument("supermatrix grading is inconsistent");
  const int g = mat.generator_count();
  const T unit = mat.unit();
  const GrassmannElement<T>& a = mat(0, 0);
  const GrassmannElement<T>& alpha = mat(0, 1);
  const GrassmannElement<T>& beta = mat(1, 0);
  const GrassmannElement<T>& b = mat(1, 1);
  const GrassmannElement<T> inv = even_inverse(a - b);
  const GrassmannElement<T> ab = alpha * beta;
  const GrassmannElement<T> half_term = ab * inv * inv * (unit / scalar_from(2, unit));
  const GrassmannElement<T> one = GrassmannElement<T>::constant(g, unit);
  Diagonalization1p1<T> out{SuperMatrix<T>(1, 1, g, unit), SuperMatrix<T>(1, 1, g, unit), SuperMatrix<T>(1, 1, g, unit)};
  // v_inv carries -alpha/(a-b) in its corner; the opposite assignment gives V M_D V^{-1} = M instead.
  out.v_inv(0, 0) = one - half_term;
  out.v_inv(0, 1) = -(alpha * inv);
  out.v_inv(1, 0) = beta * inv;
  out.v_inv(1, 1) = one + half_term;
  out.v(0, 0) = one - half_term;
  out.v(0, 1) = alpha * inv;
  out.v(1, 0) = -(beta * inv);
  out.v(1, 1) = one + half_term;
  out.diagonal(0, 0) = a + ab * inv;
  out.diagonal(1, 1) = b + ab * inv;
  return out;
}

/// Invariant-measure density T_{m,n} on the odd coordinates: 1 for (1|1),
/// 1 - (alpha11 alpha11* + alpha21 alpha21*)/3 for (2|1).
template <class T>
GrassmannElement<T> measure_density(long m, long n, const T& unit) {
  const int g = static_cast<int>(2 * m * n);
  GrassmannElement<T> out = GrassmannElement<T>::constant(g, unit);
  if (m == 1 && n == 1) return out;
  if (m == 2 && n == 1) {
    const T third = unit / scalar_from(3, unit);
    for (long i = 0; i < 2; ++i) {
      const int k = odd_generator_index(i, 0, 1);
      out -= GrassmannElement<T>::generator(g, k, unit) * GrassmannElement<T>::generator(g, k + 1, unit) * third;
    }
    return out;
  }
  throw std::invalid_argument("measure density is only known for (1|1) and (2|1)");
}

/// Berezin order d alpha11 d alpha11* d alpha21 d alpha21* ... for the standard layout.
std::vector<int> standard_measure_order(long m, long n);

struct BruteForceLsInput {
  long m = 1;
  long n = 1;
  std::vector<BigComplex> a;  // diagonal of A, length m+n
  std::vector<BigComplex> b;  // diagonal of B, length m+n
  BigComplex beta;
};

/// Eigenvalues of A~_m B~_m (bosonic) and A~_n B~_n (fermionic) as even elements.
struct GrassmannEigenvalues {
  std::vector<GrassmannElement<BigComplex>> bosonic;
  std::vector<GrassmannElement<BigComplex>> fermionic;
};

/// Blocks of U_g A and B U_g^dagger for diagonal A, B: returns (A~_m B~_m, A~_n B~_n).
std::pair<Matrix<GrassmannElement<BigComplex>>, Matrix<GrassmannElement<BigComplex>>> reduced_blocks(
    const BruteForceLsInput& in);

/// Closed-form eigenvalues of the reduced blocks for (1|1), and for (2|1) the expansions
/// lambda_1^2, lambda_2^2 in the products x_i = a_i b_i. Throws DegenerateArguments when
/// a_1 b_1 = a_2 b_2 in the (2|1) case.
GrassmannEigenvalues reduced_eigenvalues(const BruteForceLsInput& in);

/// Supersymmetric Leutwyler-Smilga integral over U(1|1) or U(2|1) by explicit Berezin
/// integration of the factorized ordinary-group results on Grassmann-valued eigenvalues.
BigComplex brute_force_ls(const BruteForceLsInput& in, const Precision& prec);

}  // namespace supergroup
