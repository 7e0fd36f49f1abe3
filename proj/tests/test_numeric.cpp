#include <gtest/gtest.h>

#include <random>

#include "supergroup/errors.hpp"
#include "supergroup/linalg.hpp"
#include "supergroup/numeric.hpp"

using namespace supergroup;

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Vandermonde, Examples) {
  EXPECT_EQ(vandermonde(std::vector<long>{}), 1);
  EXPECT_EQ(vandermonde(std::vector<long>{3, 1}), 2);
  EXPECT_EQ(vandermonde(std::vector<long>{2, 1, 0}), 2);
  EXPECT_EQ(vandermonde(std::vector<long>{7}), 1);
}

TEST(Vandermonde, AlternatingUnderSwap) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-20, 20);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 7;
    std::vector<long> v(n);
    for (auto& x : v) x = dist(rng);
    auto w = v;
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (j + 1) % n;
    std::swap(w[i], w[j]);
    EXPECT_EQ(vandermonde(w), -vandermonde(v));
  }
}

TEST(Vandermonde, ComplexMatchesExact) {
  const std::vector<BigRational> q{BigRational(1, 3), BigRational(-2), BigRational(5, 7)};
  std::vector<BigComplex> c;
  for (const auto& x : q) c.emplace_back(x, 256);
  const BigComplex exact(vandermonde(q), 256);
  EXPECT_LT(relative_difference(vandermonde(c), exact).to_double(), 1e-70);
  EXPECT_EQ(vandermonde(std::vector<BigComplex>{}, 128), BigComplex(1, 128));
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(Matrix<BigRational>(std::vector<std::vector<BigRational>>{{1}})), 1);
  Matrix<BigRational> id(3, 3, 0);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(determinant(id), 1);
  EXPECT_EQ(determinant(Matrix<BigRational>({{1, 2}, {3, 4}})), -2);
  EXPECT_EQ(determinant_cofactor(Matrix<BigRational>({{1, 2}, {3, 4}})), -2);
  const Matrix<BigComplex> c({{BigComplex(1, 128), BigComplex(2, 128)}, {BigComplex(3, 128), BigComplex(4, 128)}});
  EXPECT_LT(relative_difference(determinant(c), BigComplex(-2, 128)).to_double(), 1e-36);
}

TEST(Determinant, ZeroColumnAndZeroPivot) {
  EXPECT_EQ(determinant(Matrix<BigRational>({{0, 0}, {0, 0}})), 0);
  EXPECT_EQ(determinant(Matrix<BigRational>({{0, 1}, {1, 0}})), -1);
  EXPECT_THROW(determinant(Matrix<BigRational>(2, 3, 0)), std::invalid_argument);
}

TEST(Determinant, EliminationMatchesCofactor) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  const Bits bits = 256;
  for (std::size_t n : {3u, 4u}) {
    for (int trial = 0; trial < 20; ++trial) {
      Matrix<BigComplex> m(n, n, BigComplex(bits));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = BigComplex(make_rational(dist(rng), 97), make_rational(dist(rng), 89), bits);
      }
      const Real rel = relative_difference(determinant(m), determinant_cofactor(m));
      EXPECT_LT(rel, ldexp(Real(1, bits), -(bits - 32)));
    }
  }
}

TEST(Determinant, ExactGaussian) {
  const Matrix<GaussianRational> m({{GaussianRational(1, 1), GaussianRational(2)},
                                    {GaussianRational(0, 1), GaussianRational(BigRational(1, 2))}});
  // (1+i)/2 - 2i
  EXPECT_EQ(determinant(m), GaussianRational(BigRational(1, 2), BigRational(-3, 2)));
}

TEST(Real, ParseAndPrint) {
  const Real third = Real::parse("1/3", 128);
  EXPECT_EQ(third * Real(3, 128), Real(1, 128));
  EXPECT_EQ(Real::parse("-2.5e1", 128), Real(-25, 128));
  EXPECT_THROW(Real::parse("abc", 128), std::invalid_argument);
  EXPECT_THROW(Real::parse("1/0", 128), std::invalid_argument);
  const Real back = Real::parse(third.to_string(), 128);
  EXPECT_EQ(back, third);
}

TEST(BigComplex, PrecisionIsMinimumOfOperands) {
  const BigComplex a(1, 2, 128);
  const BigComplex b(3, 4, 256);
  EXPECT_EQ((a * b).bits(), 128);
  EXPECT_EQ((a + b).bits(), 128);
  EXPECT_THROW(BigComplex(32), std::invalid_argument);
}

TEST(BigComplex, Arithmetic) {
  const BigComplex a(1, 2, 128);
  const BigComplex b(3, -1, 128);
  EXPECT_EQ(a * b, BigComplex(5, 5, 128));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(pow(BigComplex(0, 1, 128), 4), BigComplex(1, 128));
  EXPECT_EQ(pow(BigComplex(2, 128), -2), BigComplex(BigRational(1, 4), 128));
  EXPECT_EQ(conj(a), BigComplex(1, -2, 128));
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(BigRational(1, 2), 3);
  const GaussianRational b(2, -1);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(a / GaussianRational(0), std::domain_error);
  EXPECT_EQ(conj(conj(a)), a);
}
