#include "supergroup/integrals.hpp"

#include <functional>
#include <stdexcept>

#include "supergroup/errors.hpp"
#include "supergroup/linalg.hpp"
#include "supergroup/young.hpp"

namespace supergroup {

namespace {

BigComplex raise(const BigComplex& z, Bits bits) { return z.rounded(bits); }

std::vector<BigComplex> raise(const std::vector<BigComplex>& v, Bits bits) {
  std::vector<BigComplex> out;
  out.reserve(v.size());
  for (const auto& z : v) out.push_back(z.rounded(bits));
  return out;
}

// Taylor order of each entry: its index among earlier bit-identical entries of the same list.
std::vector<long> repeat_orders(const std::vector<BigComplex>& v) {
  std::vector<long> orders(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (v[i] == v[j]) ++orders[j];
    }
  }
  return orders;
}

bool has_repeat(const std::vector<BigComplex>& v) {
  for (long o : repeat_orders(v)) {
    if (o > 0) return true;
  }
  return false;
}

bool boson_fermion_coincide(const SuperEigenvalues& ev) {
  for (const auto& x : ev.bosonic) {
    for (const auto& y : ev.fermionic) {
      if (x == y) return true;
    }
  }
  return false;
}

void warn_near_coincidences(const std::vector<BigComplex>& all, Bits bits, std::vector<std::string>& warnings) {
  const Real threshold = ldexp(Real(1, bits), -(bits / 2));
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) continue;
      if (relative_difference(all[i], all[j]) < threshold) {
        warnings.push_back("eigenvalues " + std::to_string(i) + " and " + std::to_string(j) +
                           " nearly coincide; evaluated with the generic formula");
      }
    }
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// det[ C(s-1-i, t_j) x_j^{s-1-i-t_j} ]; equals prod_{i<j}(x_i - x_j) when all t_j = 0.
BigComplex confluent_vandermonde(const std::vector<BigComplex>& x, const std::vector<long>& orders, Bits bits) {
  const long s = static_cast<long>(x.size());
  if (s == 0) return BigComplex(1, bits);
  bool plain = true;
  for (long o : orders) plain = plain && o == 0;
  if (plain) return vandermonde(x, bits);
  Matrix<BigComplex> v(s, s, BigComplex(bits));
  for (long i = 0; i < s; ++i) {
    const long e = s - 1 - i;
    for (long j = 0; j < s; ++j) {
      const long t = orders[j];
      if (e < t) continue;
      v(i, j) = pow(x[j], e - t) * BigComplex(BigRational(binomial(e, t)), bits);
    }
  }
  return determinant(v);
}

BigComplex beta_power(const BigComplex& beta, long exponent) {
  if (exponent < 0 && beta.is_zero()) {
    throw DegenerateArguments("beta = 0 with a negative power of beta in the prefactor");
  }
  return pow(beta, exponent);
}

void validate(const SuperEigenvalues& ev) {
  if (ev.m() + ev.n() == 0) throw std::invalid_argument("need at least one eigenvalue");
}

IntegralResult ls_evaluate(const SuperEigenvalues& ev, const Precision& prec, bool confluent) {
  validate(ev);
  const Precision work = prec.widened();
  const Bits w = work.bits;
  IntegralResult result{BigComplex(prec.bits), confluent ? Branch::confluent : Branch::generic, 0, {}};
  if (boson_fermion_coincide(ev)) {
    result.branch = Branch::vanishing;
    return result;
  }
  const long m = ev.m();
  const long n = ev.n();
  const long big_n = m + n;
  const BigComplex beta = raise(ev.beta, w);
  std::vector<BigComplex> columns = raise(ev.bosonic, w);
  const std::vector<BigComplex> ferm = raise(ev.fermionic, w);
  columns.insert(columns.end(), ferm.begin(), ferm.end());
  std::vector<long> orders = repeat_orders(raise(ev.bosonic, w));
  const std::vector<long> ferm_orders = repeat_orders(ferm);
  orders.insert(orders.end(), ferm_orders.begin(), ferm_orders.end());
  if (!confluent) warn_near_coincidences(columns, prec.bits, result.warnings);

  Matrix<BigComplex> e(big_n, big_n, BigComplex(w));
  for (long i = 1; i <= big_n; ++i) {
    const long nu = big_n - i;
    const HypergeometricSeries series = scaled_bessel_series(nu, beta, w);
    for (long j = 0; j < big_n; ++j) {
      SeriesStats stats;
      if (orders[j] == 0) {
        e(i - 1, j) = scaled_bessel_entry(nu, beta, columns[j], work, &stats);
      } else {
        e(i - 1, j) = series.taylor_coefficient(orders[j], columns[j], work, &stats);
      }
      result.terms_used += stats.terms;
    }
  }
  const std::vector<BigComplex> bos_w(columns.begin(), columns.begin() + m);
  const std::vector<long> bos_orders(orders.begin(), orders.begin() + m);
  const BigComplex denominator =
      confluent_vandermonde(bos_w, bos_orders, w) * confluent_vandermonde(ferm, ferm_orders, w);
  const long exponent2 = big_n - (m - n) * (m - n);
  BigComplex prefactor(BigRational(c_constant(m) * c_constant(n)), w);
  prefactor *= beta_power(beta, exponent2 / 2);
  result.value = (prefactor * determinant(e) / denominator).rounded(prec.bits);
  return result;
}

// det over one sector: entries h(x_i, y_j) with Taylor orders s_i (rows) and t_j (columns).
BigComplex bk_block_determinant(const std::vector<BigComplex>& x, const std::vector<BigComplex>& y, const BigComplex& beta,
                                const Precision& work, long& terms) {
  const long k = static_cast<long>(x.size());
  if (k == 0) return BigComplex(1, work.bits);
  const std::vector<long> s = repeat_orders(x);
  const std::vector<long> t = repeat_orders(y);
  Matrix<BigComplex> h(k, k, BigComplex(work.bits));
  for (long i = 0; i < k; ++i) {
    for (long j = 0; j < k; ++j) {
      SeriesStats stats;
      if (s[i] == 0 && t[j] == 0) {
        h(i, j) = bessel_ratio(0, beta * beta * x[i] * y[j], work, &stats);
      } else {
        h(i, j) = bk_mixed_taylor(s[i], t[j], beta, x[i], y[j], work, &stats);
      }
      terms += stats.terms;
    }
  }
  return determinant(h);
}

BigComplex cross_product(const SuperEigenvalues& ev, Bits bits) {
  BigComplex out(1, bits);
  for (const auto& x : ev.bosonic) {
    for (const auto& y : ev.fermionic) out *= x.rounded(bits) - y.rounded(bits);
  }
  return out;
}

IntegralResult bk_evaluate(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, const Precision& prec,
                           bool confluent) {
  validate(lambda);
  if (lambda.m() != mu.m() || lambda.n() != mu.n()) throw std::invalid_argument("lambda and mu must have equal (m|n)");
  const Precision work = prec.widened();
  const Bits w = work.bits;
  IntegralResult result{BigComplex(prec.bits), confluent ? Branch::confluent : Branch::generic, 0, {}};
  if (boson_fermion_coincide(lambda) || boson_fermion_coincide(mu)) {
    result.branch = Branch::vanishing;
    return result;
  }
  const long m = lambda.m();
  const long n = lambda.n();
  const BigComplex beta = raise(lambda.beta, w);
  const auto lb = raise(lambda.bosonic, w);
  const auto lf = raise(lambda.fermionic, w);
  const auto mb = raise(mu.bosonic, w);
  const auto mf = raise(mu.fermionic, w);
  if (!confluent) {
    std::vector<BigComplex> all = lb;
    all.insert(all.end(), lf.begin(), lf.end());
    warn_near_coincidences(all, prec.bits, result.warnings);
    all = mb;
    all.insert(all.end(), mf.begin(), mf.end());
    warn_near_coincidences(all, prec.bits, result.warnings);
  }
  BigComplex value = bk_block_determinant(lb, mb, beta, work, result.terms_used);
  value *= bk_block_determinant(lf, mf, beta, work, result.terms_used);
  value *= cross_product(lambda, w) * cross_product(mu, w);
  value /= confluent_vandermonde(lb, repeat_orders(lb), w) * confluent_vandermonde(lf, repeat_orders(lf), w);
  value /= confluent_vandermonde(mb, repeat_orders(mb), w) * confluent_vandermonde(mf, repeat_orders(mf), w);
  const BigInt c = c_constant(m) * c_constant(n);
  value *= BigComplex(BigRational(c * c), w) * beta_power(beta, (m + n) - (m - n) * (m - n));
  result.value = value.rounded(prec.bits);
  return result;
}

}  // namespace

std::string to_string(Branch b) {
  switch (b) {
    case Branch::generic:
      return "generic";
    case Branch::confluent:
      return "confluent";
    case Branch::vanishing:
      return "vanishing";
  }
  return "unknown";
}

BigInt c_constant(long n) {
  if (n < 0) throw std::invalid_argument("c_constant needs n >= 0");
  BigInt c = 1;
  for (long k = 1; k < n; ++k) c *= factorial(k);
  return c;
}

BigComplex berezinian(const SuperEigenvalues& ev) {
  if (boson_fermion_coincide(ev)) throw BosonFermionCoincidence("a bosonic eigenvalue equals a fermionic one");
  Bits bits = kDefaultBits;
  if (!ev.bosonic.empty()) bits = ev.bosonic.front().bits();
  if (!ev.fermionic.empty()) bits = std::min(bits, ev.fermionic.front().bits());
  const BigComplex num = vandermonde(ev.bosonic, bits) * vandermonde(ev.fermionic, bits);
  return num / cross_product(ev, bits);
}

IntegralResult ls_closed_form(const SuperEigenvalues& ev, const Precision& prec) {
  if (!boson_fermion_coincide(ev) && (has_repeat(ev.bosonic) || has_repeat(ev.fermionic))) return ls_confluent(ev, prec);
  return ls_evaluate(ev, prec, false);
}

IntegralResult ls_confluent(const SuperEigenvalues& ev, const Precision& prec) {
  if (!has_repeat(ev.bosonic) && !has_repeat(ev.fermionic)) {
    throw std::invalid_argument("ls_confluent needs an exact repeat within a sector");
  }
  return ls_evaluate(ev, prec, true);
}

IntegralResult bk_closed_form(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, const Precision& prec) {
  const bool repeats =
      has_repeat(lambda.bosonic) || has_repeat(lambda.fermionic) || has_repeat(mu.bosonic) || has_repeat(mu.fermionic);
  if (repeats && !boson_fermion_coincide(lambda) && !boson_fermion_coincide(mu)) return bk_confluent(lambda, mu, prec);
  return bk_evaluate(lambda, mu, prec, false);
}

IntegralResult bk_confluent(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, const Precision& prec) {
  const bool repeats =
      has_repeat(lambda.bosonic) || has_repeat(lambda.fermionic) || has_repeat(mu.bosonic) || has_repeat(mu.fermionic);
  if (!repeats) throw std::invalid_argument("bk_confluent needs an exact repeat within a sector");
  return bk_evaluate(lambda, mu, prec, true);
}

BigComplex nondiag_limit_ls(const BigComplex& a, const BigComplex& alpha_beta_coeff, const BigComplex& beta,
                            const Precision& prec) {
  // With lambda^2 = (a + d | a + eps + d), d = -alpha beta'/eps, the eps -> 0 limit of
  // beta (g1(x) g0(y) - g1(y) g0(x)) is -beta alpha beta' (g1 g0'' - g1'' g0)(a).
  const Precision work = prec.widened();
  const Bits w = work.bits;
  const BigComplex b = beta.rounded(w);
  const BigComplex x = a.rounded(w);
  const HypergeometricSeries g0 = scaled_bessel_series(0, b, w);
  const HypergeometricSeries g1 = scaled_bessel_series(1, b, w);
  const BigComplex wronskian2 = g1.evaluate(x, work) * g0.taylor_coefficient(2, x, work) -
                                g1.taylor_coefficient(2, x, work) * g0.evaluate(x, work);
  const BigComplex value = -(b * alpha_beta_coeff.rounded(w) * wronskian2 * BigComplex(2, w));
  return value.rounded(prec.bits);
}

BigComplex nondiag_limit_bk(const BigComplex& a, const BigComplex& mu1_sq, const BigComplex& mu2_sq,
                            const BigComplex& alpha_beta_coeff, const BigComplex& beta, const Precision& prec) {
  // (x - y) h1(x) h2(y) with x = a + d, y = a + eps + d tends to alpha beta' (h1' h2 + h1 h2')(a).
  const Precision work = prec.widened();
  const Bits w = work.bits;
  const BigComplex b = beta.rounded(w);
  const BigComplex x = a.rounded(w);
  const HypergeometricSeries h1 = bk_entry_series(b, mu1_sq, w);
  const HypergeometricSeries h2 = bk_entry_series(b, mu2_sq, w);
  const BigComplex sum = h1.taylor_coefficient(1, x, work) * h2.evaluate(x, work) +
                         h1.evaluate(x, work) * h2.taylor_coefficient(1, x, work);
  const BigComplex value =
      b * b * (mu1_sq.rounded(w) - mu2_sq.rounded(w)) * alpha_beta_coeff.rounded(w) * sum;
  return value.rounded(prec.bits);
}

namespace {

// Non-degenerate covariant diagrams of Gl(m|n) with exactly `boxes` boxes.
std::vector<SuperDiagram> diagrams_with_boxes(long m, long n, long boxes) {
  std::vector<SuperDiagram> out;
  const long rest = boxes - m * n;
  for (long a = 0; a <= rest; ++a) {
    for (const Partition& p : partitions_of(a, m)) {
      for (const Partition& q : partitions_of(rest - a, n)) out.push_back({m, n, p, q});
    }
  }
  return out;
}

}  // namespace

ExpansionResult ls_character_expansion(const SuperEigenvalues& ev, long max_boxes, const Precision& prec) {
  if (ev.m() < 1 || ev.n() < 1) throw std::invalid_argument("character expansion needs m, n >= 1");
  const Bits w = prec.working_bits();
  const auto bos = raise(ev.bosonic, w);
  const auto ferm = raise(ev.fermionic, w);
  const BigComplex beta = raise(ev.beta, w);
  ExpansionResult out{BigComplex(w), BigComplex(w), Real(-1, w), 0};
  for (long boxes = ev.m() * ev.n(); boxes <= max_boxes; ++boxes) {
    BigComplex shell(w);
    for (const SuperDiagram& sd : diagrams_with_boxes(ev.m(), ev.n(), boxes)) {
      const Partition t = assemble(sd);
      const BigRational s = sigma_coefficient(t) / BigRational(factorial(boxes));
      const BigRational weight = s * s * norm_alpha(sd);
      shell += supercharacter_amu(sd, bos, ferm) * BigComplex(weight, w);
      ++out.diagrams;
    }
    shell *= pow(beta, 2 * boxes);
    out.value += shell;
    out.last_shell = shell;
  }
  out.value = out.value.rounded(prec.bits);
  out.last_shell = out.last_shell.rounded(prec.bits);
  return out;
}

ExpansionResult bk_character_expansion(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, long max_boxes,
                                       const Precision& prec) {
  const long m = lambda.m();
  const long n = lambda.n();
  if (m < 1 || n < 1 || mu.m() != m || mu.n() != n) throw std::invalid_argument("character expansion needs matching m, n >= 1");
  const Bits w = prec.working_bits();
  const BigComplex beta = raise(lambda.beta, w);
  const auto lb = raise(lambda.bosonic, w);
  const auto lf = raise(lambda.fermionic, w);
  const auto mb = raise(mu.bosonic, w);
  const auto mf = raise(mu.fermionic, w);
  ExpansionResult out{BigComplex(w), BigComplex(w), Real(-1, w), 0};
  for (long boxes = m * n; boxes <= max_boxes; ++boxes) {
    BigComplex shell(w);
    for (const SuperDiagram& sd : diagrams_with_boxes(m, n, boxes)) {
      const Partition t = assemble(sd);
      const BigRational s = sigma_coefficient(t) * norm_alpha(sd) / BigRational(factorial(boxes));
      shell += supercharacter_amu(sd, lb, lf) * supercharacter_amu(sd, mb, mf) * BigComplex(BigRational(s * s), w);
      ++out.diagrams;
    }
    shell *= pow(beta, 2 * boxes);
    out.value += shell;
    out.last_shell = shell;
  }
  if (m == 1 && n == 1) {
    // The sum factorizes into beta^2 Sigma(lambda) Sigma(mu) sum_{a,b} u^a v^b / ((a!)^2 (b!)^2);
    // the shell a + b = s is bounded by (|u| + |v|)^s / (s! floor(s/2)! ceil(s/2)!).
    const BigComplex b2 = beta * beta;
    const Real u = (b2 * lb[0] * mb[0]).abs();
    const Real v = (b2 * lf[0] * mf[0]).abs();
    const Real uv = u + v;
    const Real prefactor = (b2 * (lb[0] - lf[0]) * (mb[0] - mf[0])).abs();
    const long first = max_boxes;  // shells s = a + b >= max_boxes are discarded
    const auto shell_bound = [&](long s) {
      BigInt den = factorial(s) * factorial(s / 2) * factorial(s - s / 2);
      Real p(1, w);
      for (long i = 0; i < s; ++i) p *= uv;
      return p / Real(den, w);
    };
    // consecutive shell ratio (u+v)/((s+1) ceil((s+1)/2)) decreases in s
    const Real ratio = uv / Real((first + 1) * ((first + 2) / 2), w);
    if (ratio < Real(1, w)) {
      out.tail_bound = prefactor * shell_bound(first) / (Real(1, w) - ratio);
    }
  }
  out.value = out.value.rounded(prec.bits);
  out.last_shell = out.last_shell.rounded(prec.bits);
  return out;
}

}  // namespace supergroup
