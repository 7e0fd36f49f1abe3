#include <gtest/gtest.h>

#include <random>

#include "supergroup/conjecture.hpp"
#include "supergroup/errors.hpp"
#include "supergroup/sampling.hpp"

using namespace supergroup;

namespace {

constexpr Bits kBits = 256;
const Precision kPrec{};

BigComplex qc(long re_num, long re_den, long im_num, long im_den) {
  return {make_rational(re_num, re_den), make_rational(im_num, im_den), kBits};
}

Real tolerance(long slack) { return ldexp(Real(1, kBits), -(kBits - slack)); }

BigRational inv_factorial_squared(long k) {
  const BigInt f = factorial(k);
  return make_rational(1, f * f);
}

// Direct multi-index sums over [0,K]^N, written from the series definitions.
BigComplex brute_j(const std::vector<BigComplex>& z, long m, long K, bool cross) {
  const long N = static_cast<long>(z.size());
  std::vector<long> k(N, 0);
  BigComplex sum(kBits);
  BigComplex p(1, kBits);
  if (cross) {
    for (long i = 0; i < m; ++i) {
      for (long j = m; j < N; ++j) p *= z[i] - z[j];
    }
  }
  while (true) {
    BigRational c = 1;
    if (cross) {
      c *= BigRational(vandermonde(std::vector<long>(k.begin(), k.begin() + m)));
      c *= BigRational(vandermonde(std::vector<long>(k.begin() + m, k.end())));
      for (long i = 0; i < m; ++i) {
        for (long j = m; j < N; ++j) c /= BigRational(k[i] + k[j] + 1);
      }
    } else {
      c *= BigRational(vandermonde(k));
    }
    if (sgn(c) != 0) {
      for (long x : k) c *= inv_factorial_squared(x);
      BigComplex term(c, kBits);
      for (long j = 0; j < N; ++j) term *= pow(z[j], k[j]);
      sum += term;
    }
    long pos = 0;
    while (pos < N && ++k[pos] > K) k[pos++] = 0;
    if (pos == N) break;
  }
  return cross ? sum * p : sum;
}

std::vector<BigComplex> test_points(std::mt19937_64& rng, long N) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::vector<BigComplex> z;
  for (long j = 0; j < N; ++j) z.push_back(qc(num(rng), 7, num(rng), 11));
  return z;
}

}  // namespace

TEST(JSeries, SingleVariableIsBesselTypeSeries) {
  const BigComplex z = qc(3, 4, -1, 5);
  BigComplex expected(kBits);
  for (long k = 0; k <= 12; ++k) expected += BigComplex(inv_factorial_squared(k), kBits) * pow(z, k);
  EXPECT_LE(relative_difference(j0_truncated({z}, 12, kPrec), expected), tolerance(8));
  EXPECT_LE(relative_difference(jm_truncated({z}, 1, 12, kPrec), expected), tolerance(8));
}

TEST(JSeries, TwoVariableLowOrderCoefficients) {
  // With K = 1: J_0 = Delta(1,0) z1 + Delta(0,1) z2 = z1 - z2.
  const BigComplex z1 = qc(2, 3, 0, 1);
  const BigComplex z2 = qc(-1, 5, 1, 2);
  EXPECT_LE((j0_truncated({z1, z2}, 1, kPrec) - (z1 - z2)).abs(), tolerance(8));
  // J_1 at K = 0 would be (z1 - z2)/1; at K = 1 the z1-linear part is still exactly z1.
  const BigComplex z1_only = jm_truncated({z1, BigComplex(kBits)}, 1, 1, kPrec);
  const BigComplex expected = z1 * (BigComplex(1, kBits) + z1 / BigComplex(2, kBits));
  EXPECT_LE((z1_only - expected).abs(), tolerance(8));
}

TEST(JSeries, TwoVariableDoubleLoop) {
  const BigComplex z1(make_rational(1, 2), kBits);
  const BigComplex z2(make_rational(1, 3), kBits);
  BigComplex expected(kBits);
  for (long a = 0; a <= 40; ++a) {
    for (long b = 0; b <= 40; ++b) {
      if (a == b) continue;
      expected += BigComplex(BigRational(a - b) * inv_factorial_squared(a) * inv_factorial_squared(b), kBits) *
                  pow(z1, a) * pow(z2, b);
    }
  }
  EXPECT_LE(relative_difference(j0_truncated({z1, z2}, 40, kPrec), expected), tolerance(8));
}

TEST(JSeries, DeterminantFormsMatchMultiIndexSums) {
  std::mt19937_64 rng(17);
  for (long N = 1; N <= 5; ++N) {
    const long K = N <= 3 ? 6 : (N == 4 ? 5 : 4);
    const std::vector<BigComplex> z = test_points(rng, N);
    const BigComplex j0 = j0_truncated(z, K, kPrec);
    EXPECT_LE(relative_difference(j0, brute_j(z, N, K, false)), tolerance(16)) << "N=" << N;
    for (long m = 1; m <= N; ++m) {
      EXPECT_LE(relative_difference(jm_truncated(z, m, K, kPrec), brute_j(z, m, K, true)), tolerance(16))
          << "N=" << N << " m=" << m;
    }
  }
}

TEST(JSeries, AntisymmetricUnderTransposition) {
  std::mt19937_64 rng(5);
  std::vector<BigComplex> z = test_points(rng, 4);
  const BigComplex before = j0_truncated(z, 20, kPrec);
  std::swap(z[1], z[3]);
  EXPECT_LE((j0_truncated(z, 20, kPrec) + before).abs(), tolerance(16) * before.abs());
}

TEST(JSeries, IndependentOfMWithinTailBound) {
  std::mt19937_64 rng(9);
  const long K = 40;
  for (long N = 2; N <= 5; ++N) {
    const std::vector<BigComplex> z = test_points(rng, N);
    const Real bound = j_tail_bound(N, Real(2, kBits), K);
    const BigComplex j1 = jm_truncated(z, 1, K, kPrec);
    for (long m = 2; m <= N; ++m) {
      EXPECT_LE((jm_truncated(z, m, K, kPrec) - j1).abs(), bound + bound) << "N=" << N << " m=" << m;
    }
  }
}

TEST(JSeries, TailBoundShrinksWithK) {
  const Real r(2, kBits);
  EXPECT_LT(j_tail_bound(4, r, 64), j_tail_bound(4, r, 32));
  EXPECT_LT(j_tail_bound(8, r, 64), ldexp(Real(1, kBits), -190));
}

TEST(Sampling, DeterministicAndInsideDisk) {
  const BigRational radius = 2;
  const auto a = sample_disk(42, 3, 6, radius);
  const auto b = sample_disk(42, 3, 6, radius);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_disk(43, 3, 6, radius));
  EXPECT_NE(a, sample_disk(42, 4, 6, radius));
  for (long s = 0; s < 50; ++s) {
    for (const auto& g : sample_disk(7, s, 4, radius)) EXPECT_LE(g.re * g.re + g.im * g.im, radius * radius);
  }
}

TEST(Sampling, SplitMixReferenceValue) {
  // First output of the reference SplitMix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(VerifyConjecture, ProvedSmallCases) {
  for (long N = 2; N <= 3; ++N) {
    for (long m = 1; m <= N; ++m) {
      ConjectureConfig config;
      config.N = N;
      config.m = m;
      config.samples = 4;
      const ConjectureReport report = verify_conjecture(config, kPrec);
      EXPECT_TRUE(report.pass) << "N=" << N << " m=" << m;
      EXPECT_EQ(report.samples.size(), 4U);
      EXPECT_LE(report.max_rel_diff, report.tolerance);
      EXPECT_LT(report.max_rel_diff, Real(BigRational(1, 10), kBits));
    }
  }
}

TEST(VerifyConjecture, IndependentOfJobs) {
  ConjectureConfig config;
  config.N = 4;
  config.m = 2;
  config.samples = 6;
  const ConjectureReport serial = verify_conjecture(config, kPrec);
  config.jobs = 4;
  const ConjectureReport parallel = verify_conjecture(config, kPrec);
  ASSERT_EQ(serial.samples.size(), parallel.samples.size());
  for (std::size_t i = 0; i < serial.samples.size(); ++i) {
    EXPECT_EQ(serial.samples[i].z, parallel.samples[i].z);
    EXPECT_TRUE(serial.samples[i].j0 == parallel.samples[i].j0);
    EXPECT_TRUE(serial.samples[i].jm == parallel.samples[i].jm);
  }
  EXPECT_TRUE(serial.max_rel_diff == parallel.max_rel_diff);
}

TEST(VerifyConjecture, RejectsBadConfigurations) {
  ConjectureConfig config;
  config.N = 11;
  EXPECT_THROW(verify_conjecture(config, kPrec), std::invalid_argument);
  config.N = 3;
  config.m = 4;
  EXPECT_THROW(verify_conjecture(config, kPrec), std::invalid_argument);
  config.m = 1;
  config.radius = 5;
  EXPECT_THROW(verify_conjecture(config, kPrec), std::invalid_argument);
  config.radius = 2;
  Precision capped;
  capped.truncation_cap = 8;
  EXPECT_THROW(verify_conjecture(config, capped), TruncationCapExceeded);
  config.K = 1;
  capped.truncation_cap = 512;
  EXPECT_THROW(verify_conjecture(config, capped), TruncationCapExceeded);
}

TEST(Coefficients, SmallExamples) {
  EXPECT_EQ(f_coefficient(Partition{}, 1), 1);
  EXPECT_EQ(f_coefficient(Partition{1}, 1), 1);
  // N = 2, r = empty: k = (1, 0), Delta = 1, prod (k!)^2 = 1.
  EXPECT_EQ(f_coefficient(Partition{}, 2), 1);
  // N = 3, r = empty: k = (2, 1, 0), Delta = 2, prod (k!)^2 = 4.
  EXPECT_EQ(f_coefficient(Partition{}, 3), make_rational(1, 2));
  EXPECT_EQ(g_coefficient(Partition{}, Partition{}, 1, 1), 1);
  // p = (1), m = n = 1: k^a = (1), k^b = (0): 1/(1 * 2).
  EXPECT_EQ(g_coefficient(Partition{1}, Partition{}, 1, 1), make_rational(1, 2));
  EXPECT_THROW(f_coefficient(Partition{1, 1}, 1), TooManyRows);
}

TEST(LrRelation, SingleCells) {
  const LrCheck empty = lr_relation_check(Partition{}, Partition{}, 1, 1);
  EXPECT_TRUE(empty.equal);
  EXPECT_EQ(empty.terms, 1);
  EXPECT_EQ(empty.lhs, 1);
  const LrCheck one = lr_relation_check(Partition{1}, Partition{}, 1, 1);
  EXPECT_TRUE(one.equal);
  EXPECT_EQ(one.residual, 0);
  EXPECT_THROW(lr_relation_check(Partition{1, 1}, Partition{}, 1, 1), TooManyRows);
}

TEST(LrRelation, SweepIsExact) {
  for (const auto& [m, n, boxes] : std::vector<std::tuple<long, long, long>>{{1, 1, 8}, {2, 1, 8}, {2, 2, 6}}) {
    const std::vector<LrCheck> sweep = lr_sweep(boxes, m, n, 2);
    EXPECT_FALSE(sweep.empty());
    for (const LrCheck& c : sweep) {
      EXPECT_EQ(c.residual, 0) << "m=" << m << " n=" << n << " p=" << c.p.to_string() << " q=" << c.q.to_string();
    }
  }
}

TEST(PartialCoefficients, SmallestCase) {
  const PartialCoefficientCheck c = partial_coefficient_check(0, 0, 1, 2);
  EXPECT_EQ(c.extracted, 1);
  EXPECT_TRUE(c.equal);
}

TEST(PartialCoefficients, Grid) {
  for (long N = 2; N <= 4; ++N) {
    for (long m = 1; m < N; ++m) {
      for (long km = m - 1; km <= 4; ++km) {
        for (long kn = N - m - 1; kn <= 4; ++kn) {
          const PartialCoefficientCheck c = partial_coefficient_check(km, kn, m, N);
          EXPECT_TRUE(c.equal) << "N=" << N << " m=" << m << " k=(" << km << "," << kn << ")";
        }
      }
    }
  }
  EXPECT_THROW(partial_coefficient_check(0, 0, 2, 3), std::invalid_argument);
}

TEST(SupertracePower, OneOneTwoBoxes) {
  const BigRational a = make_rational(3, 5);
  const BigRational y = make_rational(-2, 7);
  const auto checks = character_expansion_check(2, {a}, {y});
  ASSERT_EQ(checks.size(), 2U);
  EXPECT_EQ(checks[0].lhs, a - y);
  EXPECT_EQ(checks[1].lhs, (a - y) * (a - y));
  EXPECT_TRUE(checks[0].equal);
  EXPECT_TRUE(checks[1].equal);
}

TEST(SupertracePower, ExhaustiveSmallGroups) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  for (long m = 0; m <= 2; ++m) {
    for (long n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      std::vector<BigRational> bos, ferm;
      for (long i = 0; i < m; ++i) bos.push_back(make_rational(num(rng), den(rng)));
      for (long j = 0; j < n; ++j) ferm.push_back(make_rational(num(rng), den(rng)));
      for (const auto& c : character_expansion_check(6, bos, ferm)) {
        EXPECT_TRUE(c.equal) << "m=" << m << " n=" << n << " boxes=" << c.boxes;
      }
    }
  }
}

TEST(DeterminantTheorems, FactorialDeterminantExample) {
  // det[[1/1!, 1/(-1)!], [1/2!, 1/0!]] = 1 = Delta(2, 0)/(2! 0!).
  EXPECT_TRUE(theorem3_check(Partition{1}, 2));
  for (long N = 1; N <= 6; ++N) {
    for (long i = 0; i < 10; ++i) EXPECT_TRUE(theorem3_check(random_partition(3, i, N, 8), N));
  }
  EXPECT_THROW(theorem3_check(Partition{1, 1, 1}, 2), TooManyRows);
}

TEST(DeterminantTheorems, RandomPartitionsRespectLimits) {
  for (long i = 0; i < 20; ++i) {
    const Partition p = random_partition(1, i, 4, 5);
    EXPECT_LE(p.length(), 4U);
    EXPECT_LE(p.row(0), 5);
    EXPECT_EQ(p, random_partition(1, i, 4, 5));
  }
}

TEST(DeterminantTheorems, AllChecksPass) {
  for (long N = 1; N <= 5; ++N) {
    for (const TheoremCheck& c : determinant_theorem_checks(N, 42, 10, kPrec)) EXPECT_TRUE(c.pass) << c.name << " N=" << N << ": " << c.detail;
  }
  EXPECT_THROW(determinant_theorem_checks(7, 42, 1, kPrec), std::invalid_argument);
}

TEST(HookSeries, ReplaysClosedForm) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(2, 5);
  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}}) {
    for (int trial = 0; trial < 2; ++trial) {
      SuperEigenvalues ev{{}, {}, BigComplex(1, kBits)};
      for (long i = 0; i < m; ++i) ev.bosonic.push_back(qc(num(rng), den(rng), num(rng), den(rng)));
      for (long j = 0; j < n; ++j) ev.fermionic.push_back(qc(num(rng), den(rng), num(rng), den(rng)));
      const BigComplex closed = ls_closed_form(ev, kPrec).value;
      const BigComplex series = ls_hook_series(ev, 18, kPrec);
      EXPECT_LT(relative_difference(series, closed), ldexp(Real(1, kBits), -40))
          << "m=" << m << " n=" << n << " trial=" << trial;
    }
  }
}
