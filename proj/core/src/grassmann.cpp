#include "supergroup/grassmann.hpp"

namespace supergroup {

namespace {

using Element = GrassmannElement<BigComplex>;
using ElementMatrix = Matrix<Element>;

ElementMatrix multiply(const ElementMatrix& a, const ElementMatrix& b) {
  ElementMatrix out(a.rows(), b.cols(), Element(a(0, 0).generator_count(), a(0, 0).unit()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

SuperMatrix<BigComplex> diagonal_matrix(long m, long n, const std::vector<BigComplex>& d, int g, const BigComplex& unit) {
  SuperMatrix<BigComplex> out(m, n, g, unit);
  for (long i = 0; i < m + n; ++i) out(i, i) = Element::constant(g, d[i]);
  return out;
}

void check_input(const BruteForceLsInput& in) {
  const bool supported = (in.m == 1 && in.n == 1) || (in.m == 2 && in.n == 1);
  if (!supported) throw std::invalid_argument("brute-force integration is available for (1|1) and (2|1) only");
  if (static_cast<long>(in.a.size()) != in.m + in.n || static_cast<long>(in.b.size()) != in.m + in.n) {
    throw std::invalid_argument("diagonal entries must number m+n");
  }
}

// Haar-normalized ordinary U(k) integral of exp(beta tr(A U + B U^dagger)) in terms of the
// eigenvalues x_j of AB: C_k beta^{(k-k^2)/2} det[x_j^{(k-i)/2} I_{k-i}(2 beta sqrt(x_j))] / Delta(x).
Element ordinary_ls_factor(const std::vector<Element>& x, const BigComplex& beta, const Precision& prec) {
  const long k = static_cast<long>(x.size());
  const int g = x.front().generator_count();
  const BigComplex& unit = x.front().unit();
  ElementMatrix entries(k, k, Element(g, unit));
  for (long i = 1; i <= k; ++i) {
    const HypergeometricSeries series = scaled_bessel_series(k - i, beta, prec.working_bits());
    for (long j = 0; j < k; ++j) entries(i - 1, j) = analytic_eval(series, x[j], prec);
  }
  Element value = even_determinant(entries);
  Element vandermonde_value = Element::constant(g, unit);
  for (long i = 0; i < k; ++i) {
    for (long j = i + 1; j < k; ++j) vandermonde_value *= x[i] - x[j];
  }
  value *= even_inverse(vandermonde_value);
  BigInt c = 1;
  for (long t = 1; t < k; ++t) c *= factorial(t);
  // (k - k^2)/2 is a non-positive integer
  value *= BigComplex(BigRational(c), unit.bits()) * pow(beta.rounded(unit.bits()), (k - k * k) / 2);
  return value;
}

}  // namespace

std::vector<int> standard_measure_order(long m, long n) {
  std::vector<int> order;
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) {
      order.push_back(odd_generator_index(i, j, n));
      order.push_back(odd_generator_index(i, j, n) + 1);
    }
  }
  return order;
}

std::pair<ElementMatrix, ElementMatrix> reduced_blocks(const BruteForceLsInput& in) {
  check_input(in);
  const int g = static_cast<int>(2 * in.m * in.n);
  const BigComplex unit(1, in.a.front().bits());
  const SuperMatrix<BigComplex> ug = exp_odd_block(in.m, in.n, unit);
  const SuperMatrix<BigComplex> ug_a = ug * diagonal_matrix(in.m, in.n, in.a, g, unit);
  const SuperMatrix<BigComplex> b_ugd = diagonal_matrix(in.m, in.n, in.b, g, unit) * conjugate_transpose(ug);
  return {multiply(ug_a.block(0, in.m), b_ugd.block(0, in.m)), multiply(ug_a.block(in.m, in.n), b_ugd.block(in.m, in.n))};
}

GrassmannEigenvalues reduced_eigenvalues(const BruteForceLsInput& in) {
  const auto [bos, ferm] = reduced_blocks(in);
  GrassmannEigenvalues out;
  out.fermionic.push_back(ferm(0, 0));
  if (in.m == 1) {
    out.bosonic.push_back(bos(0, 0));
    return out;
  }
  const int g = bos(0, 0).generator_count();
  const BigComplex unit = bos(0, 0).unit();
  const BigComplex x1 = in.a[0] * in.b[0];
  const BigComplex x2 = in.a[1] * in.b[1];
  if ((x1 - x2).is_zero()) throw DegenerateArguments("a1 b1 = a2 b2: the (2|1) eigenvalue expansion is singular");
  const Element n1 = Element::generator(g, 0, unit) * Element::generator(g, 1, unit);
  const Element n2 = Element::generator(g, 2, unit) * Element::generator(g, 3, unit);
  const BigComplex three_diff = BigComplex(3, unit.bits()) * (x1 - x2);
  const Element one = Element::constant(g, unit);
  out.bosonic.push_back((one - n1 - n1 * n2 * ((x1 + BigComplex(2, unit.bits()) * x2) / three_diff)) * x1);
  out.bosonic.push_back((one - n2 + n1 * n2 * ((BigComplex(2, unit.bits()) * x1 + x2) / three_diff)) * x2);
  return out;
}

BigComplex brute_force_ls(const BruteForceLsInput& in, const Precision& prec) {
  check_input(in);
  const Precision work = prec.widened();
  BruteForceLsInput raised = in;
  for (auto& v : raised.a) v = v.rounded(work.bits);
  for (auto& v : raised.b) v = v.rounded(work.bits);
  raised.beta = in.beta.rounded(work.bits);
  const GrassmannEigenvalues ev = reduced_eigenvalues(raised);
  const BigComplex unit(1, work.bits);
  Element integrand = measure_density(in.m, in.n, unit);
  integrand *= ordinary_ls_factor(ev.bosonic, raised.beta, work);
  integrand *= ordinary_ls_factor(ev.fermionic, -raised.beta, work);
  const Element result = berezin_integrate(integrand, standard_measure_order(in.m, in.n));
  return result.body().rounded(prec.bits);
}

}  // namespace supergroup
