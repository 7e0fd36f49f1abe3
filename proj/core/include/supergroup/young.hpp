#pragma once

// Partitions, (m|n) super diagrams and the exact combinatorics built on them:
// standard-tableaux counts, hook lengths, Gl(m) dimensions, Schur and super-Schur
// functions, supercharacters, representation norms and Littlewood-Richardson numbers.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supergroup/errors.hpp"
#include "supergroup/linalg.hpp"
#include "supergroup/numeric.hpp"

namespace supergroup {

/// Young diagram as weakly decreasing rows; trailing zeros are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument for negative or increasing rows.
  Partition(std::vector<long> rows);  // NOLINT(google-explicit-constructor)
  Partition(std::initializer_list<long> rows) : Partition(std::vector<long>(rows)) {}

  const std::vector<long>& rows() const { return rows_; }
  /// Row i (0-based); 0 past the last row.
  long row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
  std::size_t length() const { return rows_.size(); }
  long size() const;
  bool empty() const { return rows_.empty(); }
  Partition transpose() const;
  bool contains(const Partition& other) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<long> rows_;
};

/// All partitions of `boxes` with at most max_rows rows and parts at most max_part
/// (negative limits mean unbounded), in reverse lexicographic order.
std::vector<Partition> partitions_of(long boxes, long max_rows = -1, long max_part = -1);

/// Non-degenerate covariant diagram of Gl(m|n): an m x n block, p to its right, q transposed below.
struct SuperDiagram {
  long m = 1;
  long n = 1;
  Partition p;
  Partition q;

  /// Throws std::invalid_argument / TooManyRows when the fields are inconsistent.
  void validate() const;
  friend bool operator==(const SuperDiagram&, const SuperDiagram&) = default;
};

Partition assemble(const SuperDiagram& sd);

/// Inverse of assemble. Returns nullopt for a covariant diagram that does not contain the
/// m x n block (degenerate); throws NotCovariant when t_{m+1} > n.
std::optional<SuperDiagram> decompose_superdiagram(const Partition& t, long m, long n);

/// True when t fits the (m|n) hook, t_{m+1} <= n.
bool is_covariant(const Partition& t, long m, long n);

/// k_i = rows + p_i - i for i = 1..rows (strictly decreasing). Throws TooManyRows.
std::vector<long> k_indices(const Partition& p, long rows);

/// Number of standard Young tableaux, |t|! Delta(k) / prod k_i! ; 1 for the empty diagram.
BigRational sigma_coefficient(const Partition& t);

BigInt hook_product(const Partition& t);

/// Dimension of the Gl(m) irrep with highest weight p, Delta(k)/prod (m-i)!.
BigInt dimension_glm(const Partition& p, long m);

/// prod_{i,j} 1/(k_i + k_{m+j} + 1) with k_i = m + p_i - i and k_{m+j} = n + q_j - j.
BigRational sigma_decomposition_factor(const SuperDiagram& sd);

/// (-1)^{|q|} (|t|!/(|p|!|q|!)) (sigma_p sigma_q / sigma_t) / (d_p d_q).
BigRational norm_alpha(const SuperDiagram& sd);

/// Littlewood-Richardson number c^r_{mu nu} by lattice-word tableau enumeration.
BigInt lr_coefficient(const Partition& r, const Partition& mu, const Partition& nu);

namespace detail {

inline BigRational unit_for(const std::vector<BigRational>&) { return 1; }
inline GaussianRational unit_for(const std::vector<GaussianRational>&) { return 1; }
inline BigComplex unit_for(const std::vector<BigComplex>& v) { return {1, v.empty() ? kDefaultBits : v.front().bits()}; }

/// Partitions mu with lambda/mu a horizontal (vertical) strip.
std::vector<Partition> strip_removals(const Partition& lambda, bool horizontal);

template <class T>
class TableauxSum {
 public:
  TableauxSum(const std::vector<T>& bos, const std::vector<T>& ferm, T one)
      : bos_(bos), ferm_(ferm), one_(std::move(one)) {}

  // Bosonic letters: weakly increasing rows (horizontal strips), weight a_i.
  T bosonic(const Partition& lambda, std::size_t letters) {
    if (lambda.empty()) return one_;
    if (letters == 0 || lambda.length() > letters) return one_ - one_;
    const auto key = std::make_pair(lambda, letters);
    if (auto it = bos_memo_.find(key); it != bos_memo_.end()) return it->second;
    T sum = one_ - one_;
    const T& x = bos_[letters - 1];
    for (const Partition& mu : strip_removals(lambda, true)) {
      T inner = bosonic(mu, letters - 1);
      if (is_zero(inner)) continue;
      for (long c = mu.size(); c < lambda.size(); ++c) inner *= x;
      sum += inner;
    }
    bos_memo_.emplace(key, sum);
    return sum;
  }

  // Fermionic letters after all bosonic ones: strictly increasing rows (vertical strips), weight -y_j.
  T super(const Partition& lambda, std::size_t letters) {
    if (letters == 0) return bosonic(lambda, bos_.size());
    const auto key = std::make_pair(lambda, letters);
    if (auto it = super_memo_.find(key); it != super_memo_.end()) return it->second;
    T sum = one_ - one_;
    const T y = -ferm_[letters - 1];
    for (const Partition& mu : strip_removals(lambda, false)) {
      T inner = super(mu, letters - 1);
      if (is_zero(inner)) continue;
      for (long c = mu.size(); c < lambda.size(); ++c) inner *= y;
      sum += inner;
    }
    super_memo_.emplace(key, sum);
    return sum;
  }

 private:
  std::vector<T> bos_;
  std::vector<T> ferm_;
  T one_;
  std::map<std::pair<Partition, std::size_t>, T> bos_memo_;
  std::map<std::pair<Partition, std::size_t>, T> super_memo_;
};

}  // namespace detail

/// Schur polynomial s_p(values) as the semistandard-tableaux monomial sum.
template <class T>
T schur_tableaux(const Partition& p, const std::vector<T>& values) {
  detail::TableauxSum<T> sum(values, {}, detail::unit_for(values));
  return sum.bosonic(p, values.size());
}

/// Signed (m|n)-semistandard tableaux sum: bosonic letters precede fermionic ones, each
/// fermionic letter contributes -y_j. Vanishes automatically outside the (m|n) hook.
template <class T>
T super_schur_tableaux(const Partition& t, const std::vector<T>& bos, const std::vector<T>& ferm) {
  T one = bos.empty() ? detail::unit_for(ferm) : detail::unit_for(bos);
  detail::TableauxSum<T> sum(bos, ferm, std::move(one));
  return sum.super(t, ferm.size());
}

namespace detail {

inline bool nearly_coincident(const std::vector<BigComplex>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Bits bits = std::min(v[i].bits(), v[j].bits());
      if (relative_difference(v[i], v[j]) < ldexp(Real(1, bits), -(bits / 2)) || (v[i] - v[j]).is_zero()) return true;
    }
  }
  return false;
}

template <class T>
bool nearly_coincident(const std::vector<T>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Weyl's formula det[a_i^{k_j}]/Delta(a), k_j = m + p_j - j. Throws DegenerateArguments when
/// two values coincide within relative 2^{-bits/2} (exactly, for exact scalars).
template <class T>
T schur_bialternant(const Partition& p, const std::vector<T>& values) {
  const long m = static_cast<long>(values.size());
  if (static_cast<long>(p.length()) > m) return detail::unit_for(values) - detail::unit_for(values);
  if (p.empty()) return detail::unit_for(values);
  if (detail::nearly_coincident(values)) throw DegenerateArguments("bialternant arguments coincide");
  const std::vector<long> k = k_indices(p, m);
  const T one = detail::unit_for(values);
  Matrix<T> a(m, m, one);
  for (long i = 0; i < m; ++i) {
    T power = one;
    std::vector<T> powers{one};
    for (long e = 1; e <= k.front(); ++e) {
      power *= values[i];
      powers.push_back(power);
    }
    for (long j = 0; j < m; ++j) a(i, j) = powers[k[j]];
  }
  return determinant(a) / vandermonde(values, one);
}

/// Schur function through the bialternant, falling back to tableaux at coinciding arguments.
template <class T>
T schur_character(const Partition& p, const std::vector<T>& values) {
  try {
    return schur_bialternant(p, values);
  } catch (const DegenerateArguments&) {
    return schur_tableaux(p, values);
  }
}

/// (-1)^{|q|} prod (a_i - y_j) chi_p(bos) chi_q(ferm).
template <class T>
T supercharacter_amu(const SuperDiagram& sd, const std::vector<T>& bos, const std::vector<T>& ferm) {
  sd.validate();
  if (static_cast<long>(bos.size()) != sd.m || static_cast<long>(ferm.size()) != sd.n) {
    throw std::invalid_argument("eigenvalue counts do not match the diagram's (m|n)");
  }
  T value = schur_character(sd.p, bos) * schur_character(sd.q, ferm);
  for (const T& a : bos) {
    for (const T& y : ferm) value *= a - y;
  }
  return sd.q.size() % 2 == 0 ? value : -value;
}

}  // namespace supergroup
