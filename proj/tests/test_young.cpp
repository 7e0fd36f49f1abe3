#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <random>

#include "supergroup/young.hpp"

using namespace supergroup;

namespace {

// Standard Young tableaux counted by removing the cell holding the largest entry.
BigInt count_syt(const std::vector<long>& rows, std::map<std::vector<long>, BigInt>& memo) {
  long total = 0;
  for (long r : rows) total += r;
  if (total == 0) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  BigInt sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const long next = i + 1 < rows.size() ? rows[i + 1] : 0;
    if (rows[i] > next) {
      auto smaller = rows;
      --smaller[i];
      sum += count_syt(smaller, memo);
    }
  }
  memo[rows] = sum;
  return sum;
}

using Monomials = std::map<std::vector<long>, BigInt>;

// Schur polynomial in `vars` variables by explicit enumeration of semistandard fillings.
Monomials schur_monomials(const Partition& p, int vars) {
  Monomials out;
  std::vector<std::vector<long>> fill(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) fill[i].assign(p.row(i), 0);
  std::vector<long> exps(vars, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long j) {
    if (i == p.length()) {
      out[exps] += 1;
      return;
    }
    if (j == p.row(i)) {
      rec(i + 1, 0);
      return;
    }
    long lo = j > 0 ? fill[i][j - 1] : 1;
    if (i > 0) lo = std::max(lo, fill[i - 1][j] + 1);
    for (long v = lo; v <= vars; ++v) {
      fill[i][j] = v;
      ++exps[v - 1];
      rec(i, j + 1);
      --exps[v - 1];
    }
  };
  rec(0, 0);
  return out;
}

Monomials multiply(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      auto e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<BigRational> random_rationals(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<BigRational> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(make_rational(num(rng), den(rng)));
  }
  return out;
}

}  // namespace

TEST(Partition, NormalizesAndValidates) {
  EXPECT_EQ(Partition({2, 1, 0, 0}), Partition({2, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  EXPECT_EQ(Partition({3, 1}).transpose(), Partition({2, 1, 1}));
  EXPECT_EQ(Partition().size(), 0);
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(12).size(), 77u);
  EXPECT_EQ(partitions_of(5, 2).size(), 3u);
  EXPECT_EQ(partitions_of(0).size(), 1u);
}

TEST(SuperDiagram, AssembleExamples) {
  EXPECT_EQ(assemble({1, 1, {}, {}}), Partition({1}));
  EXPECT_EQ(assemble({1, 1, {1}, {1}}), Partition({2, 1}));
  EXPECT_EQ(assemble({2, 1, {}, {}}), Partition({1, 1}));
  EXPECT_THROW(assemble({1, 1, {1, 1}, {}}), TooManyRows);
}

TEST(SuperDiagram, DecomposeExamples) {
  EXPECT_EQ(decompose_superdiagram({2, 1}, 1, 1), (SuperDiagram{1, 1, {1}, {1}}));
  EXPECT_EQ(decompose_superdiagram({1}, 1, 1), (SuperDiagram{1, 1, {}, {}}));
  EXPECT_EQ(decompose_superdiagram({1, 1, 1}, 1, 1), (SuperDiagram{1, 1, {}, {2}}));
  EXPECT_FALSE(decompose_superdiagram({1}, 2, 1).has_value());
  EXPECT_FALSE(decompose_superdiagram({}, 1, 1).has_value());
  EXPECT_THROW(decompose_superdiagram({2, 2}, 1, 1), NotCovariant);
}

TEST(SuperDiagram, DecomposeInvertsAssemble) {
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= 3; ++n) {
      for (long boxes = 0; boxes <= 9; ++boxes) {
        for (const Partition& t : partitions_of(boxes)) {
          if (!is_covariant(t, m, n)) {
            EXPECT_THROW(decompose_superdiagram(t, m, n), NotCovariant);
            continue;
          }
          const auto sd = decompose_superdiagram(t, m, n);
          if (sd) EXPECT_EQ(assemble(*sd), t);
        }
      }
    }
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_coefficient({1}), 1);
  EXPECT_EQ(sigma_coefficient({2, 1}), 2);
  EXPECT_EQ(sigma_coefficient({3}), 1);
  EXPECT_EQ(sigma_coefficient({}), 1);
}

TEST(Sigma, CountsStandardTableaux) {
  std::map<std::vector<long>, BigInt> memo;
  for (long boxes = 0; boxes <= 10; ++boxes) {
    for (const Partition& t : partitions_of(boxes)) EXPECT_EQ(sigma_coefficient(t), BigRational(count_syt(t.rows(), memo)));
  }
}

TEST(HookProduct, Examples) {
  EXPECT_EQ(hook_product({1}), 1);
  EXPECT_EQ(hook_product({2, 1}), 3);
  EXPECT_EQ(hook_product({2, 2}), 12);
  EXPECT_EQ(hook_product({}), 1);
}

TEST(HookProduct, HookLengthFormula) {
  for (long boxes = 0; boxes <= 12; ++boxes) {
    for (const Partition& t : partitions_of(boxes)) EXPECT_EQ(sigma_coefficient(t) * BigRational(hook_product(t)), BigRational(factorial(boxes)));
  }
}

TEST(DimensionGlm, Examples) {
  EXPECT_EQ(dimension_glm({}, 3), 1);
  EXPECT_EQ(dimension_glm({1}, 2), 2);
  EXPECT_EQ(dimension_glm({2, 1}, 3), 8);
  EXPECT_THROW(dimension_glm({1, 1, 1}, 2), TooManyRows);
}

TEST(DimensionGlm, MatchesWeylProduct) {
  for (long m = 1; m <= 4; ++m) {
    for (long boxes = 0; boxes <= 6; ++boxes) {
      for (const Partition& p : partitions_of(boxes, m)) {
        BigRational prod = 1;
        for (long i = 0; i < m; ++i) {
          for (long j = i + 1; j < m; ++j) prod *= make_rational(p.row(i) - p.row(j) + j - i, j - i);
        }
        EXPECT_EQ(BigRational(dimension_glm(p, m)), prod);
        // the dimension is also the Schur polynomial at all-ones
        EXPECT_EQ(BigRational(dimension_glm(p, m)), schur_tableaux(p, std::vector<BigRational>(m, 1)));
      }
    }
  }
}

TEST(SchurTableaux, Examples) {
  const BigRational z1(2), z2(BigRational(1, 3));
  EXPECT_EQ(schur_tableaux({1}, std::vector<BigRational>{z1}), z1);
  EXPECT_EQ(schur_tableaux({2}, std::vector<BigRational>{z1, z2}), z1 * z1 + z1 * z2 + z2 * z2);
  EXPECT_EQ(schur_tableaux({1, 1}, std::vector<BigRational>{z1}), 0);
  EXPECT_EQ(schur_tableaux({}, std::vector<BigRational>{z1, z2}), 1);
}

TEST(SchurBialternant, Examples) {
  const std::vector<BigRational> z{BigRational(3, 2), BigRational(-2)};
  EXPECT_EQ(schur_bialternant({}, z), 1);
  EXPECT_EQ(schur_bialternant({1}, z), z[0] + z[1]);
  EXPECT_EQ(schur_bialternant({2, 1}, z), z[0] * z[1] * (z[0] + z[1]));
  EXPECT_THROW(schur_bialternant({1}, std::vector<BigRational>{1, 1}), DegenerateArguments);
  const std::vector<BigComplex> near{BigComplex(1, 256), BigComplex(1, 256) + BigComplex(BigRational(1, BigInt(1) << 200), 256)};
  EXPECT_THROW(schur_bialternant({1}, near), DegenerateArguments);
  EXPECT_LT(relative_difference(schur_character({1}, near), near[0] + near[1]).to_double(), 1e-70);
}

TEST(SchurBialternant, AgreesWithTableaux) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-50, 50);
  const Bits bits = 256;
  for (long m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<BigComplex> z;
      for (long i = 0; i < m; ++i) z.emplace_back(make_rational(d(rng), 17), make_rational(d(rng), 13), bits);
      for (long boxes = 0; boxes <= 6; ++boxes) {
        for (const Partition& p : partitions_of(boxes, m)) {
          const Real rel = relative_difference(schur_bialternant(p, z), schur_tableaux(p, z));
          EXPECT_LT(rel, ldexp(Real(1, bits), -(bits - 40))) << p.to_string();
        }
      }
    }
  }
}

TEST(SuperSchur, Examples) {
  const BigRational a1(5, 2), a2(-1, 3);
  const std::vector<BigRational> bos{a1}, ferm{a2};
  EXPECT_EQ(super_schur_tableaux({1}, bos, ferm), a1 - a2);
  EXPECT_EQ(super_schur_tableaux({2}, bos, ferm), a1 * (a1 - a2));
  EXPECT_EQ(super_schur_tableaux({1, 1}, bos, ferm), a2 * a2 - a1 * a2);
  EXPECT_EQ(super_schur_tableaux({2, 2}, bos, ferm), 0);
  EXPECT_EQ(super_schur_tableaux({}, bos, ferm), 1);
}

TEST(Supercharacter, Examples) {
  const BigRational a1(5, 2), a2(-1, 3);
  const std::vector<BigRational> bos{a1}, ferm{a2};
  EXPECT_EQ(supercharacter_amu({1, 1, {}, {}}, bos, ferm), a1 - a2);
  EXPECT_EQ(supercharacter_amu({1, 1, {1}, {}}, bos, ferm), (a1 - a2) * a1);
  EXPECT_EQ(supercharacter_amu({1, 1, {}, {1}}, bos, ferm), -(a1 - a2) * a2);
  EXPECT_THROW(supercharacter_amu({1, 1, {}, {}}, std::vector<BigRational>{}, ferm), std::invalid_argument);
}

TEST(Supercharacter, MatchesSignedTableauxSum) {
  std::mt19937_64 rng(99);
  for (long m = 1; m <= 2; ++m) {
    for (long n = 1; n <= 2; ++n) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto bos = random_rationals(rng, m);
        const auto ferm = random_rationals(rng, n);
        for (long boxes = 0; boxes <= 6; ++boxes) {
          for (const Partition& t : partitions_of(boxes)) {
            if (!is_covariant(t, m, n)) {
              EXPECT_EQ(super_schur_tableaux(t, bos, ferm), 0);
              continue;
            }
            if (auto sd = decompose_superdiagram(t, m, n)) EXPECT_EQ(supercharacter_amu(*sd, bos, ferm), super_schur_tableaux(t, bos, ferm));
          }
        }
      }
    }
  }
}

TEST(Supercharacter, CoincidingBosonicValuesUseFallback) {
  const std::vector<BigComplex> bos{BigComplex(2, 256), BigComplex(2, 256)};
  const std::vector<BigComplex> ferm{BigComplex(BigRational(1, 2), 256)};
  const SuperDiagram sd{2, 1, {2, 1}, {1}};
  const BigComplex a = supercharacter_amu(sd, bos, ferm);
  const BigComplex b = super_schur_tableaux(assemble(sd), bos, ferm);
  EXPECT_LT(relative_difference(a, b).to_double(), 1e-70);
}

TEST(NormAlpha, Examples) {
  EXPECT_EQ(norm_alpha({1, 1, {}, {}}), 1);
  EXPECT_EQ(norm_alpha({1, 1, {1}, {}}), 2);
  EXPECT_EQ(norm_alpha({1, 1, {}, {1}}), -2);
}

TEST(SigmaDecomposition, Examples) {
  // k-indices (0|0), (1|0), (1,0|0)
  EXPECT_EQ(sigma_decomposition_factor({1, 1, {}, {}}), 1);
  EXPECT_EQ(sigma_decomposition_factor({1, 1, {1}, {}}), BigRational(1, 2));
  EXPECT_EQ(sigma_decomposition_factor({2, 1, {}, {}}), BigRational(1, 2));
}

TEST(SigmaDecomposition, ReproducesSigmaOfAssembledDiagram) {
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= 3; ++n) {
      for (long boxes = 0; boxes <= 10; ++boxes) {
        for (const Partition& t : partitions_of(boxes)) {
          if (!is_covariant(t, m, n)) continue;
          const auto sd = decompose_superdiagram(t, m, n);
          if (!sd) continue;
          const BigRational lhs = sigma_coefficient(t) / BigRational(factorial(t.size()));
          const BigRational rhs = sigma_coefficient(sd->p) / BigRational(factorial(sd->p.size())) * sigma_coefficient(sd->q) /
                                  BigRational(factorial(sd->q.size())) * sigma_decomposition_factor(*sd);
          EXPECT_EQ(lhs, rhs) << t.to_string() << " m=" << m << " n=" << n;
        }
      }
    }
  }
}

TEST(LittlewoodRichardson, Examples) {
  EXPECT_EQ(lr_coefficient({2}, {1}, {1}), 1);
  EXPECT_EQ(lr_coefficient({1, 1}, {1}, {1}), 1);
  EXPECT_EQ(lr_coefficient({2, 1}, {2}, {1}), 1);
  EXPECT_EQ(lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}), 2);
  EXPECT_EQ(lr_coefficient({2}, {1, 1}, {}), 0);
  EXPECT_EQ(lr_coefficient({1}, {2}, {}), 0);
}

TEST(LittlewoodRichardson, ReproducesSchurProducts) {
  const int vars = 4;
  std::map<Partition, Monomials> cache;
  const auto schur = [&](const Partition& p) -> const Monomials& {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, schur_monomials(p, vars)).first;
    return it->second;
  };
  for (long total = 0; total <= 8; ++total) {
    for (long a = 0; a <= total; ++a) {
      for (const Partition& mu : partitions_of(a, vars)) {
        for (const Partition& nu : partitions_of(total - a, vars)) {
          const Monomials product = multiply(schur(mu), schur(nu));
          Monomials expansion;
          for (const Partition& r : partitions_of(total, vars)) {
            const BigInt c = lr_coefficient(r, mu, nu);
            if (c == 0) continue;
            for (const auto& [e, coeff] : schur(r)) expansion[e] += c * coeff;
          }
          EXPECT_EQ(product, expansion) << mu.to_string() << " x " << nu.to_string();
        }
      }
    }
  }
}
