#pragma once

// Closed-form supersymmetric Leutwyler-Smilga and Berezin-Karpelevich integrals
// over U(m|n), their confluent and boson-fermion coincidence limits, the limits for
// non-diagonalizable (1|1) supermatrices, and truncated character expansions.
//
// All inputs are squared eigenvalues lambda^2; no square roots are taken.

#include <string>
#include <vector>

#include "supergroup/numeric.hpp"
#include "supergroup/series.hpp"

namespace supergroup {

struct SuperEigenvalues {
  std::vector<BigComplex> bosonic;    // lambda^2_1 .. lambda^2_m
  std::vector<BigComplex> fermionic;  // lambda^2_{m+1} .. lambda^2_{m+n}
  BigComplex beta;

  long m() const { return static_cast<long>(bosonic.size()); }
  long n() const { return static_cast<long>(fermionic.size()); }
};

enum class Branch { generic, confluent, vanishing };

std::string to_string(Branch b);

struct IntegralResult {
  BigComplex value;
  Branch branch = Branch::generic;
  long terms_used = 0;                // series terms summed over all entries
  std::vector<std::string> warnings;  // e.g. near-coincident eigenvalues
};

/// prod_{k=1}^{n-1} k!.
BigInt c_constant(long n);

/// Delta(bosonic) Delta(fermionic) / prod_{i,j} (lambda^2_i - lambda^2_{m+j}).
/// Throws BosonFermionCoincidence when a bosonic entry equals a fermionic one.
BigComplex berezinian(const SuperEigenvalues& ev);

/// I_LS = C_m C_n beta^{((m+n)-(m-n)^2)/2} det[lambda_j^{m+n-i} I_{m+n-i}(2 beta lambda_j)]
///        / (Delta(bosonic) Delta(fermionic)).
/// Exact repeats inside a sector dispatch to ls_confluent; a bosonic value equal to a
/// fermionic one gives the vanishing branch.
IntegralResult ls_closed_form(const SuperEigenvalues& ev, const Precision& prec);

/// Confluent evaluation: the t-th repeat of a value uses the Taylor coefficient f^(t)/t! of
/// the column entries, and the Vandermonde factor is transformed the same way.
/// Throws std::invalid_argument if no sector has an exact repeat.
IntegralResult ls_confluent(const SuperEigenvalues& ev, const Precision& prec);

/// I_BK = C_m^2 C_n^2 beta^{(m+n)-(m-n)^2} det_m[I_0(2 beta lambda_i mu_j)] det_n[...]
///        / (B(lambda^2) B(mu^2)), with the coupling taken from lambda.beta.
IntegralResult bk_closed_form(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, const Precision& prec);

/// Confluent evaluation with row (lambda repeats) and column (mu repeats) Taylor replacement.
IntegralResult bk_confluent(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, const Precision& prec);

/// (1|1) supermatrix AB = [[a, alpha], [beta', a + eps]] as eps -> 0: the Leutwyler-Smilga
/// integral tends to c * (alpha beta'), and this returns c for alpha beta' = alpha_beta_coeff * N.
BigComplex nondiag_limit_ls(const BigComplex& a, const BigComplex& alpha_beta_coeff, const BigComplex& beta,
                            const Precision& prec);

/// Same limit for the Berezin-Karpelevich integral with lambda-matrix [[a, alpha], [beta', a + eps]]
/// and distinct mu^2 = (mu1_sq | mu2_sq).
BigComplex nondiag_limit_bk(const BigComplex& a, const BigComplex& mu1_sq, const BigComplex& mu2_sq,
                            const BigComplex& alpha_beta_coeff, const BigComplex& beta, const Precision& prec);

struct ExpansionResult {
  BigComplex value;
  BigComplex last_shell;  // contribution of the largest box count kept
  Real tail_bound;        // rigorous bound on the discarded terms where available, else -1
  long diagrams = 0;
};

/// sum over non-degenerate t with |t| <= max_boxes of (sigma_t beta^{|t|}/|t|!)^2 alpha_t xi_t(lambda^2).
ExpansionResult ls_character_expansion(const SuperEigenvalues& ev, long max_boxes, const Precision& prec);

/// sum over non-degenerate t with |t| <= max_boxes of (sigma_t alpha_t beta^{|t|}/|t|!)^2 xi_t(lambda^2) xi_t(mu^2).
/// For m = n = 1 also returns a rigorous tail bound.
ExpansionResult bk_character_expansion(const SuperEigenvalues& lambda, const SuperEigenvalues& mu, long max_boxes,
                                       const Precision& prec);

}  // namespace supergroup
