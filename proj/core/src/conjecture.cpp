#include "supergroup/conjecture.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "supergroup/errors.hpp"
#include "supergroup/linalg.hpp"
#include "supergroup/parallel.hpp"
#include "supergroup/sampling.hpp"

namespace supergroup {

namespace {

// Weighted powers z_j^k/(k!)^2, k = 0..K, shared by the phi and Cauchy-type entries.
struct JSeriesTables {
  Bits bits;
  std::vector<std::vector<BigComplex>> weighted;  // weighted[j][k]
  std::vector<Real> reciprocal;                   // reciprocal[s] = 1/s, s = 1..2K+1

  JSeriesTables(const std::vector<BigComplex>& z, long K, Bits w) : bits(w) {
    std::vector<Real> weight;
    BigInt f = 1;
    for (long k = 0; k <= K; ++k) {
      if (k > 0) f *= k;
      weight.emplace_back(make_rational(1, f * f), w);
    }
    for (const auto& x : z) {
      const BigComplex xr = x.rounded(w);
      BigComplex power(1, w);
      std::vector<BigComplex> row;
      for (long k = 0; k <= K; ++k) {
        if (k > 0) power *= xr;
        row.push_back(power * weight[k]);
      }
      weighted.push_back(std::move(row));
    }
    reciprocal.emplace_back(w);
    for (long s = 1; s <= 2 * K + 1; ++s) reciprocal.emplace_back(make_rational(1, s), w);
  }

  // phi_p(z_j) = sum_k k^p z_j^k/(k!)^2 for p = 0..count-1.
  std::vector<BigComplex> phis(std::size_t j, long count) const {
    std::vector<BigComplex> current = weighted[j];
    std::vector<BigComplex> out;
    for (long p = 0; p < count; ++p) {
      BigComplex sum(bits);
      for (const auto& t : current) sum += t;
      out.push_back(sum);
      for (std::size_t k = 0; k < current.size(); ++k) current[k] *= Real(static_cast<long>(k), bits);
    }
    return out;
  }

  // sum_{a,b} z_i^a z_j^b / ((a!)^2 (b!)^2 (a+b+1))
  BigComplex cauchy(std::size_t i, std::size_t j) const {
    const std::size_t n = weighted[j].size();
    BigComplex sum(bits);
    for (std::size_t a = 0; a < n; ++a) {
      BigComplex inner(bits);
      for (std::size_t b = 0; b < n; ++b) inner += weighted[j][b] * reciprocal[a + b + 1];
      sum += weighted[i][a] * inner;
    }
    return sum;
  }
};

void require_series_args(const std::vector<BigComplex>& z, long K) {
  if (z.empty()) throw std::invalid_argument("need at least one variable");
  if (K < 1) throw std::invalid_argument("truncation depth K must be at least 1");
}

Real real_power(const Real& x, long e) {
  Real out(1, x.bits());
  for (long i = 0; i < e; ++i) out *= x;
  return out;
}

BigRational inverse_factorial(long n) {
  if (n < 0) return 0;
  return make_rational(1, factorial(n));
}

}  // namespace

BigComplex j0_truncated(const std::vector<BigComplex>& z, long K, const Precision& prec) {
  require_series_args(z, K);
  const Bits w = prec.working_bits();
  const long N = static_cast<long>(z.size());
  const JSeriesTables tables(z, K, w);
  Matrix<BigComplex> e(N, N, BigComplex(w));
  for (long j = 0; j < N; ++j) {
    const std::vector<BigComplex> phi = tables.phis(static_cast<std::size_t>(j), N);
    for (long i = 0; i < N; ++i) e(i, j) = phi[N - 1 - i];
  }
  return determinant(e).rounded(prec.bits);
}

BigComplex jm_truncated(const std::vector<BigComplex>& z, long m, long K, const Precision& prec) {
  require_series_args(z, K);
  const long N = static_cast<long>(z.size());
  if (m < 1 || m > N) throw std::invalid_argument("m must lie in [1, N]");
  const Bits w = prec.working_bits();
  const JSeriesTables tables(z, K, w);
  const long n = N - m;
  // Rows run over the larger block; its Vandermonde is supplied by phi columns of
  // decreasing degree, the smaller block enters through Cauchy-type columns.
  const bool bosonic_rows = m >= n;
  const long big = bosonic_rows ? m : n;
  const long small = bosonic_rows ? n : m;
  const long big_first = bosonic_rows ? 0 : m;
  const long small_first = bosonic_rows ? m : 0;
  Matrix<BigComplex> b(big, big, BigComplex(w));
  for (long i = 0; i < big; ++i) {
    const auto row = static_cast<std::size_t>(big_first + i);
    for (long c = 0; c < small; ++c) b(i, c) = tables.cauchy(row, static_cast<std::size_t>(small_first + c));
    const std::vector<BigComplex> phi = tables.phis(row, big - small);
    for (long l = 0; l < big - small; ++l) b(i, small + l) = phi[big - small - 1 - l];
  }
  BigComplex cross(1, w);
  for (long i = 0; i < m; ++i) {
    for (long j = m; j < N; ++j) cross *= z[i].rounded(w) - z[j].rounded(w);
  }
  BigComplex value = cross * determinant(b);
  if ((small * (big - small)) % 2 != 0) value = -value;
  return value.rounded(prec.bits);
}

Real j_tail_bound(long N, const Real& r, long K) {
  const Bits bits = r.bits();
  const BigInt kf = factorial(K + 1);
  Real bound = Real(N, bits) * real_power(r, K + 1) / Real(BigInt(kf * kf), bits);
  bound *= real_power(Real(K + N, bits), N * (N - 1) / 2);
  bound *= real_power(Real(1, bits) + r + r, N * N);
  return bound;
}

ConjectureReport verify_conjecture(const ConjectureConfig& config, const Precision& prec) {
  prec.validate();
  if (config.N < 1 || config.N > config.max_N) throw std::invalid_argument("N must lie in [1, max_N]");
  if (config.m < 1 || config.m > config.N) throw std::invalid_argument("m must lie in [1, N]");
  if (config.samples < 1) throw std::invalid_argument("need at least one sample");
  if (sgn(config.radius) <= 0 || config.radius > 4) throw std::invalid_argument("radius must lie in (0, 4]");
  if (config.K < 1) throw std::invalid_argument("truncation depth K must be at least 1");
  if (config.K > prec.truncation_cap) {
    throw TruncationCapExceeded("J-series depth K = " + std::to_string(config.K) + " exceeds the truncation cap " +
                                std::to_string(prec.truncation_cap));
  }
  const BigRational decay = config.radius / BigRational((config.K + 1) * (config.K + 1));
  if (decay >= BigRational(1, 2)) throw TruncationCapExceeded("radius too large for the J-series depth K");

  ConjectureReport report{config, prec.bits, {}, Real(prec.bits), Real(prec.bits), Real(prec.bits), true};
  report.tail_bound = j_tail_bound(config.N, Real(config.radius, prec.working_bits()), config.K).rounded(prec.bits);
  const Real rounding = ldexp(Real(1, prec.bits), -(static_cast<long>(prec.bits) - 64));
  report.samples = parallel_map<ConjectureSample>(
      static_cast<std::size_t>(config.samples), config.jobs, [&](std::size_t s) {
        ConjectureSample sample{sample_disk(config.seed, s, config.N, config.radius), BigComplex(prec.bits),
                                BigComplex(prec.bits), Real(prec.bits), Real(prec.bits)};
        std::vector<BigComplex> z;
        for (const auto& g : sample.z) z.emplace_back(g.re, g.im, prec.working_bits());
        // Differences are taken before the final rounding so that agreement beyond the
        // reported precision is still visible.
        const BigComplex j0 = j0_truncated(z, config.K, prec.widened());
        const BigComplex jm = jm_truncated(z, config.m, config.K, prec.widened());
        sample.j0 = j0.rounded(prec.bits);
        sample.jm = jm.rounded(prec.bits);
        sample.abs_diff = (j0 - jm).abs().rounded(prec.bits);
        sample.rel_diff = relative_difference(j0, jm).rounded(prec.bits);
        return sample;
      });
  bool first = true;
  for (const auto& s : report.samples) {
    const Real magnitude = s.j0.abs();
    const Real allowance = magnitude.is_zero() ? rounding : (report.tail_bound + report.tail_bound) / magnitude + rounding;
    if (first || allowance < report.tolerance) report.tolerance = allowance;
    if (first || s.rel_diff > report.max_rel_diff) report.max_rel_diff = s.rel_diff;
    if (!(s.rel_diff <= allowance)) report.pass = false;
    first = false;
  }
  return report;
}

BigRational f_coefficient(const Partition& r, long N) {
  const std::vector<long> k = k_indices(r, N);
  BigInt den = 1;
  for (long x : k) den *= factorial(x) * factorial(x);
  return make_rational(vandermonde(k), den);
}

BigRational g_coefficient(const Partition& p, const Partition& q, long m, long n) {
  const std::vector<long> ka = k_indices(p, m);
  const std::vector<long> kb = k_indices(q, n);
  BigInt den = 1;
  for (long x : ka) den *= factorial(x) * factorial(x);
  for (long x : kb) den *= factorial(x) * factorial(x);
  for (long a : ka) {
    for (long b : kb) den *= a + b + 1;
  }
  return make_rational(vandermonde(ka) * vandermonde(kb), den);
}

LrCheck lr_relation_check(const Partition& p, const Partition& q, long m, long n) {
  if (static_cast<long>(p.length()) > m || static_cast<long>(q.length()) > n) {
    throw TooManyRows("p needs at most m rows and q at most n rows");
  }
  const long N = m + n;
  LrCheck out{p, q, 0, g_coefficient(p, q, m, n), 0, 0, false};
  for (const Partition& r : partitions_of(p.size() + q.size(), N)) {
    if (!r.contains(p)) continue;
    const BigInt c = lr_coefficient(r, p, q);
    if (sgn(c) == 0) continue;
    out.lhs += f_coefficient(r, N) * BigRational(c);
    ++out.terms;
  }
  out.residual = out.lhs - out.rhs;
  out.equal = sgn(out.residual) == 0;
  return out;
}

std::vector<LrCheck> lr_sweep(long max_boxes, long m, long n, unsigned jobs) {
  std::vector<std::pair<Partition, Partition>> cells;
  for (long total = 0; total <= max_boxes; ++total) {
    for (long a = 0; a <= total; ++a) {
      for (const Partition& p : partitions_of(a, m)) {
        for (const Partition& q : partitions_of(total - a, n)) cells.emplace_back(p, q);
      }
    }
  }
  return parallel_map<LrCheck>(cells.size(), jobs,
                               [&](std::size_t i) { return lr_relation_check(cells[i].first, cells[i].second, m, n); });
}

namespace {

// Coefficients of J_0 / prod_{i<m<=j}(z_i - z_j), from P = (x - y) Q  =>  q_{a,b} = sum_t p_{a+1+t, b-t}.
class QuotientCoefficients {
 public:
  QuotientCoefficients(long m, long N) : N_(N) {
    for (long i = 0; i < m; ++i) {
      for (long j = m; j < N; ++j) pairs_.emplace_back(i, j);
    }
    memo_.resize(pairs_.size() + 1);
  }

  BigRational quotient(const std::vector<long>& k) { return at(pairs_.size(), k); }

 private:
  BigRational at(std::size_t level, const std::vector<long>& k) {
    if (level == 0) return j0_coefficient(k);
    auto it = memo_[level].find(k);
    if (it != memo_[level].end()) return it->second;
    const auto [i, j] = pairs_[level - 1];
    BigRational sum = 0;
    std::vector<long> shifted = k;
    for (long t = 0; t <= k[j]; ++t) {
      shifted[i] = k[i] + 1 + t;
      shifted[j] = k[j] - t;
      sum += at(level - 1, shifted);
    }
    memo_[level].emplace(k, sum);
    return sum;
  }

  BigRational j0_coefficient(const std::vector<long>& k) const {
    BigInt den = 1;
    for (long x : k) den *= factorial(x) * factorial(x);
    return make_rational(vandermonde(k), den);
  }

  long N_;
  std::vector<std::pair<long, long>> pairs_;
  std::vector<std::map<std::vector<long>, BigRational>> memo_;
};

BigInt superfactorial(long n) {
  BigInt out = 1;
  for (long l = 1; l <= n; ++l) out *= factorial(l);
  return out;
}

}  // namespace

PartialCoefficientCheck partial_coefficient_check(long k_m, long k_N, long m, long N) {
  if (m < 1 || m >= N) throw std::invalid_argument("need 1 <= m < N");
  const long km0 = m - 1;
  const long kN0 = N - m - 1;
  if (k_m < km0 || k_N < kN0) throw std::invalid_argument("need k_m >= m-1 and k_N >= N-m-1");
  std::vector<long> k;
  for (long i = 0; i < m - 1; ++i) k.push_back(i);
  k.push_back(k_m);
  for (long j = 0; j < N - m - 1; ++j) k.push_back(j);
  k.push_back(k_N);

  PartialCoefficientCheck out{k_m, k_N, m, N, 0, 0, 0, false};
  QuotientCoefficients quotient(m, N);
  const std::vector<long> ka(k.begin(), k.begin() + m);
  const std::vector<long> kb(k.begin() + m, k.end());
  out.extracted = quotient.quotient(k) / BigRational(vandermonde(ka) * vandermonde(kb));

  const BigInt sigma0 = superfactorial(km0 + kN0 - 1) * superfactorial(km0 - 1) * superfactorial(kN0 - 1);
  BigInt den = factorial(k_m) * factorial(k_m) * factorial(k_N) * factorial(k_N) * (k_m + k_N + 1) * sigma0;
  for (long i = 1; i <= kN0; ++i) den *= k_m + i;
  for (long j = 1; j <= km0; ++j) den *= k_N + j;
  out.formula = make_rational(1, den);

  BigInt general = 1;
  for (long x : k) general *= factorial(x) * factorial(x);
  for (long a : ka) {
    for (long b : kb) general *= a + b + 1;
  }
  out.general = make_rational(1, general);
  out.equal = out.extracted == out.formula && out.extracted == out.general;
  return out;
}

std::vector<SupertracePowerCheck> character_expansion_check(long boxes_max, const std::vector<BigRational>& bos,
                                                            const std::vector<BigRational>& ferm) {
  const long m = static_cast<long>(bos.size());
  const long n = static_cast<long>(ferm.size());
  BigRational str = 0;
  for (const auto& a : bos) str += a;
  for (const auto& y : ferm) str -= y;
  std::vector<SupertracePowerCheck> out;
  BigRational power = 1;
  for (long b = 1; b <= boxes_max; ++b) {
    power *= str;
    SupertracePowerCheck check{b, power, 0, false};
    for (const Partition& t : partitions_of(b)) {
      if (!is_covariant(t, m, n)) continue;
      check.rhs += sigma_coefficient(t) * super_schur_tableaux(t, bos, ferm);
    }
    check.equal = check.lhs == check.rhs;
    out.push_back(std::move(check));
  }
  return out;
}

bool theorem3_check(const Partition& n, long N) {
  if (static_cast<long>(n.length()) > N) throw TooManyRows("partition has more than N rows");
  Matrix<BigRational> a(N, N, BigRational(0));
  for (long i = 1; i <= N; ++i) {
    for (long j = 1; j <= N; ++j) a(i - 1, j - 1) = inverse_factorial(n.row(j - 1) + i - j);
  }
  const std::vector<long> k = k_indices(n, N);
  BigInt den = 1;
  for (long x : k) den *= factorial(x);
  return determinant(a) == make_rational(vandermonde(k), den);
}

Partition random_partition(std::uint64_t seed, std::uint64_t index, long N, long max_part) {
  std::vector<long> rows;
  for (long c = 0; c < N; ++c) {
    rows.push_back(static_cast<long>(counter_hash(seed, index, static_cast<std::uint64_t>(c), 0) %
                                     static_cast<std::uint64_t>(max_part + 1)));
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  return Partition(rows);
}

namespace {

// Strictly decreasing tuples k_1 > ... > k_N >= 0 with k_1 <= K.
void decreasing_tuples(long N, long K, std::vector<long>& current, const std::function<void(const std::vector<long>&)>& visit) {
  if (static_cast<long>(current.size()) == N) {
    visit(current);
    return;
  }
  const long remaining = N - static_cast<long>(current.size());
  const long top = current.empty() ? K : current.back() - 1;
  for (long k = top; k >= remaining - 1; --k) {
    current.push_back(k);
    decreasing_tuples(N, K, current, visit);
    current.pop_back();
  }
}

TheoremCheck rearrangement_check(long N, std::uint64_t seed) {
  // A_k = Delta(k)/prod (k!)^2 is antisymmetric; a_i are distinct rationals.
  const long K = N <= 4 ? 8 : N;
  std::vector<BigRational> a;
  for (long i = 0; i < N; ++i) {
    a.push_back(make_rational(static_cast<long>(counter_hash(seed, 1000, static_cast<std::uint64_t>(i), 0) % 9) + 1 + 10 * i, 7));
  }
  const auto coefficient = [](const std::vector<long>& k) {
    BigInt den = 1;
    for (long x : k) den *= factorial(x) * factorial(x);
    return make_rational(vandermonde(k), den);
  };
  std::vector<std::vector<BigRational>> powers(N);
  for (long i = 0; i < N; ++i) {
    powers[i].push_back(1);
    for (long k = 1; k <= K; ++k) powers[i].push_back(powers[i].back() * a[i]);
  }
  BigRational free_sum = 0;
  std::vector<long> k(N, 0);
  while (true) {
    BigRational term = coefficient(k);
    if (sgn(term) != 0) {
      for (long i = 0; i < N; ++i) term *= powers[i][k[i]];
      free_sum += term;
    }
    long pos = 0;
    while (pos < N && ++k[pos] > K) k[pos++] = 0;
    if (pos == N) break;
  }
  BigRational ordered_sum = 0;
  std::vector<long> current;
  decreasing_tuples(N, K, current, [&](const std::vector<long>& kk) {
    Matrix<BigRational> m(N, N, BigRational(0));
    for (long i = 0; i < N; ++i) {
      for (long j = 0; j < N; ++j) m(i, j) = powers[i][kk[j]];
    }
    ordered_sum += coefficient(kk) * determinant(m);
  });
  const bool pass = free_sum == ordered_sum;
  return {"rearrangement", N, pass, "K=" + std::to_string(K) + (pass ? ", exact equality" : ", sums differ")};
}

TheoremCheck power_series_determinant_check(long N, std::uint64_t seed, const Precision& prec) {
  // f_i(z) = sum_k z^k/(k!(k+i-1)!) = bessel_ratio(i-1, z) with |z_j| <= 1.
  const long K = N <= 3 ? 30 : (N == 4 ? 24 : 16);
  const Precision work = prec.widened();
  const Bits w = work.bits;
  std::vector<BigComplex> z;
  for (long j = 0; j < N; ++j) {
    const GaussianRational g = sample_disk_point(seed, 2000, static_cast<std::uint64_t>(j), 1);
    z.emplace_back(g.re, g.im, w);
  }
  Matrix<BigComplex> lhs_matrix(N, N, BigComplex(w));
  for (long i = 0; i < N; ++i) {
    for (long j = 0; j < N; ++j) lhs_matrix(i, j) = bessel_ratio(i, z[j], work);
  }
  const BigComplex lhs = determinant(lhs_matrix);
  std::vector<std::vector<BigComplex>> zpow(N);
  for (long i = 0; i < N; ++i) {
    zpow[i].emplace_back(1, w);
    for (long k = 1; k <= K; ++k) zpow[i].push_back(zpow[i].back() * z[i]);
  }
  BigComplex rhs(w);
  std::vector<long> current;
  decreasing_tuples(N, K, current, [&](const std::vector<long>& kk) {
    Matrix<BigComplex> coeff(N, N, BigComplex(w));
    Matrix<BigComplex> pw(N, N, BigComplex(w));
    for (long i = 0; i < N; ++i) {
      for (long j = 0; j < N; ++j) {
        coeff(i, j) = BigComplex(make_rational(1, factorial(kk[j]) * factorial(kk[j] + i)), w);
        pw(i, j) = zpow[i][kk[j]];
      }
    }
    rhs += determinant(coeff) * determinant(pw);
  });
  // Omitted tuples have k_1 > K: bounded by (N!)^2 (2/((K+1)!)^2) I_0(2)^{N-1}, I_0(2) < 2.28.
  const BigInt nf = factorial(N);
  const BigInt kf = factorial(K + 1);
  Real bound = Real(BigInt(nf * nf * 2), w) / Real(BigInt(kf * kf), w);
  for (long i = 1; i < N; ++i) bound *= Real(BigRational(228, 100), w);
  bound += ldexp(Real(1, w), -(static_cast<long>(prec.bits) - 32)) * lhs.abs();
  const Real diff = (lhs - rhs).abs();
  const bool pass = diff <= bound;
  return {"power-series-determinant", N, pass,
          "K=" + std::to_string(K) + ", |difference| = " + diff.to_string(6) + ", bound = " + bound.to_string(6)};
}

}  // namespace

std::vector<TheoremCheck> determinant_theorem_checks(long N, std::uint64_t seed, long partitions, const Precision& prec) {
  if (N < 1 || N > 6) throw std::invalid_argument("theorem checks need 1 <= N <= 6");
  std::vector<TheoremCheck> out;
  out.push_back(rearrangement_check(N, seed));
  out.push_back(power_series_determinant_check(N, seed, prec));
  long failures = 0;
  for (long i = 0; i < partitions; ++i) {
    if (!theorem3_check(random_partition(seed, static_cast<std::uint64_t>(i), N, 8), N)) ++failures;
  }
  out.push_back({"factorial-determinant", N, failures == 0,
                 std::to_string(partitions) + " random partitions, " + std::to_string(failures) + " failures"});
  return out;
}

BigComplex ls_hook_series(const SuperEigenvalues& ev, long max_boxes, const Precision& prec) {
  const long m = ev.m();
  const long n = ev.n();
  const Bits w = prec.working_bits();
  const BigComplex b2 = ev.beta.rounded(w) * ev.beta.rounded(w);
  std::vector<BigComplex> bos, ferm;
  for (const auto& x : ev.bosonic) bos.push_back(x.rounded(w) * b2);
  for (const auto& y : ev.fermionic) ferm.push_back(y.rounded(w) * b2);
  BigComplex sigma(1, w);
  for (const auto& a : bos) {
    for (const auto& y : ferm) sigma *= a - y;
  }
  BigComplex sum(w);
  for (long total = 0; total <= max_boxes; ++total) {
    for (long a = 0; a <= total; ++a) {
      for (const Partition& p : partitions_of(a, m)) {
        const BigComplex chi_p = schur_character(p, bos);
        for (const Partition& q : partitions_of(total - a, n)) {
          sum += BigComplex(g_coefficient(p, q, m, n), w) * chi_p * schur_character(q, ferm);
        }
      }
    }
  }
  return (sum * sigma * BigComplex(BigRational(c_constant(m) * c_constant(n)), w)).rounded(prec.bits);
}

}  // namespace supergroup
