#pragma once

// Numerical and exact checks of the power-series identity J_0 = J_m, its
// Littlewood-Richardson form, the special coefficients, the supertrace power expansion,
// and the determinant theorems used in the derivation of the closed forms.

#include <cstdint>
#include <string>
#include <vector>

#include "supergroup/integrals.hpp"
#include "supergroup/numeric.hpp"
#include "supergroup/series.hpp"
#include "supergroup/young.hpp"

namespace supergroup {

/// J_0 = sum_{k in [0,K]^N} Delta(k) prod z_j^{k_j} / (k_j!)^2.
BigComplex j0_truncated(const std::vector<BigComplex>& z, long K, const Precision& prec);

/// J_m = sum_{k in [0,K]^N} Delta(k_1..k_m) Delta(k_{m+1}..k_N) / prod (k_j!)^2
///       * prod_{i<=m<j} (z_i - z_j)/(k_i + k_j + 1) * prod z_j^{k_j}.
BigComplex jm_truncated(const std::vector<BigComplex>& z, long m, long K, const Precision& prec);

/// Bound on the terms of either series with some k_j > K, for |z_j| <= r:
/// N r^{K+1} / ((K+1)!)^2 (K+N)^{N(N-1)/2} (1+2r)^{N^2}.
Real j_tail_bound(long N, const Real& r, long K);

struct ConjectureConfig {
  long N = 2;
  long m = 1;
  long samples = 10;
  BigRational radius = 2;
  std::uint64_t seed = 42;
  long K = 64;
  long max_N = 10;
  unsigned jobs = 1;
};

struct ConjectureSample {
  std::vector<GaussianRational> z;
  BigComplex j0;
  BigComplex jm;
  Real abs_diff;
  Real rel_diff;
};

struct ConjectureReport {
  ConjectureConfig config;
  Bits precision_bits = 0;
  std::vector<ConjectureSample> samples;
  Real max_rel_diff;
  Real tail_bound;  // j_tail_bound at the sampling radius
  Real tolerance;   // smallest per-sample allowance 2 tail_bound/|J_0| + 2^-(bits-64)
  bool pass = false;
};

/// Draws config.samples points from the disk and compares both truncated series.
/// Throws std::invalid_argument for N > max_N, m outside [1, N], radius > 4 or K < 1, and
/// TruncationCapExceeded when K exceeds the precision's truncation cap or the series terms
/// do not decay by the last kept index (radius/(K+1)^2 >= 1/2).
ConjectureReport verify_conjecture(const ConjectureConfig& config, const Precision& prec);

/// f_r = Delta(k)/prod (k_i!)^2 with k_i = r_i + N - i.
BigRational f_coefficient(const Partition& r, long N);

/// g_{pq} = Delta(k^a) Delta(k^b) / prod (k!)^2 prod_{i,j} 1/(k^a_i + k^b_j + 1),
/// k^a_i = p_i + m - i, k^b_j = q_j + n - j.
BigRational g_coefficient(const Partition& p, const Partition& q, long m, long n);

struct LrCheck {
  Partition p;
  Partition q;
  BigRational lhs;  // sum_r f_r c^r_{pq}
  BigRational rhs;  // g_{pq}
  BigRational residual;
  long terms = 0;   // partitions r with a non-zero coefficient
  bool equal = false;
};

/// sum over r with at most m+n rows, r containing p and |r| = |p|+|q| of f_r c^r_{pq},
/// compared exactly with g_{pq}.
LrCheck lr_relation_check(const Partition& p, const Partition& q, long m, long n);

/// Every (p, q) with p at most m rows, q at most n rows and |p|+|q| <= max_boxes, in a
/// fixed order (by total size, then p, then q).
std::vector<LrCheck> lr_sweep(long max_boxes, long m, long n, unsigned jobs = 1);

struct PartialCoefficientCheck {
  long k_m = 0;
  long k_N = 0;
  long m = 0;
  long N = 0;
  BigRational extracted;  // s read off from J_0 / prod_{i<=m<j}(z_i - z_j)
  BigRational formula;    // closed product for the special index pattern
  BigRational general;    // prod 1/(k!)^2 prod 1/(k_i + k_j + 1)
  bool equal = false;
};

/// Special index pattern k = (0, .., m-2, k_m, 0, .., N-m-2, k_N). Needs 1 <= m < N,
/// k_m >= m-1 and k_N >= N-m-1.
PartialCoefficientCheck partial_coefficient_check(long k_m, long k_N, long m, long N);

struct SupertracePowerCheck {
  long boxes = 0;
  BigRational lhs;  // str(A)^boxes
  BigRational rhs;  // sum_t sigma_t xi_t(A)
  bool equal = false;
};

/// str(A)^b against sum over |t| = b of sigma_t xi_t(A) for b = 1..boxes_max, A diagonal
/// with the given bosonic and fermionic entries.
std::vector<SupertracePowerCheck> character_expansion_check(long boxes_max, const std::vector<BigRational>& bos,
                                                            const std::vector<BigRational>& ferm);

/// det[1/(n_j + i - j)!] against Delta(k)/prod k_i!, k_j = n_j + N - j; n padded to N rows.
bool theorem3_check(const Partition& n, long N);

/// Partition with at most N rows and parts at most max_part, from the counter hash.
Partition random_partition(std::uint64_t seed, std::uint64_t index, long N, long max_part);

struct TheoremCheck {
  std::string name;
  long N = 0;
  bool pass = false;
  std::string detail;
};

/// Rearrangement (exact rationals), determinant power-series expansion (working precision,
/// Bessel-type f_i) and the factorial determinant identity over `partitions` random partitions.
std::vector<TheoremCheck> determinant_theorem_checks(long N, std::uint64_t seed, long partitions, const Precision& prec);

/// C_m C_n sum_{|p|+|q| <= max_boxes} Delta(k^a) Delta(k^b)/prod (k!)^2 prod 1/(k_i + k_{m+j} + 1)
///   Sigma(lambda^2) chi_p(bosonic) chi_q(fermionic), the character-expansion form of I_LS at beta = 1.
BigComplex ls_hook_series(const SuperEigenvalues& ev, long max_boxes, const Precision& prec);

}  // namespace supergroup
