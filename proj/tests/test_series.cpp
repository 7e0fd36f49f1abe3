#include <gtest/gtest.h>

#include "supergroup/errors.hpp"
#include "supergroup/series.hpp"

using namespace supergroup;

namespace {

// Fixed-length partial sum of sum_k w^k / (k!(k+nu)!), written independently of the library series code.
BigComplex partial_sum(long nu, const BigRational& w, int terms, Bits bits) {
  BigRational sum = 0;
  BigRational power = 1;
  BigInt kf = 1;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) {
      power *= w;
      kf *= k;
    }
    BigInt kn = 1;
    for (long j = 2; j <= k + nu; ++j) kn *= j;
    sum += power / BigRational(kf * kn);
  }
  return {sum, bits};
}

Real tolerance(Bits bits, long slack) { return ldexp(Real(1, bits), -(bits - slack)); }

}  // namespace

TEST(BesselRatio, Examples) {
  const Precision prec;
  EXPECT_EQ(bessel_ratio(0, BigComplex(0, 256), prec), BigComplex(1, 256));
  EXPECT_EQ(bessel_ratio(2, BigComplex(0, 256), prec), BigComplex(BigRational(1, 2), 256));
  const BigComplex i0_2 = bessel_ratio(0, BigComplex(1, 256), prec);
  // 30 terms leave a tail below 1/(30!)^2 ~ 1e-65
  EXPECT_LT(relative_difference(i0_2, partial_sum(0, 1, 30, 256)).to_double(), 1e-60);
  EXPECT_NEAR(i0_2.re().to_double(), 2.27958530233606, 1e-13);
}

TEST(BesselRatio, AgreesAcrossPrecisions) {
  const Precision p256;
  Precision p512;
  p512.bits = 512;
  for (long nu = 0; nu <= 5; ++nu) {
    for (const auto& w : {BigComplex(4, 512), BigComplex(-3, 2, 512), BigComplex(BigRational(1, 7), BigRational(-5, 3), 512),
                          BigComplex(0, 4, 512)}) {
      const BigComplex a = bessel_ratio(nu, w.rounded(256), p256);
      const BigComplex b = bessel_ratio(nu, w, p512);
      EXPECT_LT(relative_difference(a.rounded(512), b), ldexp(Real(1, 512), -200));
    }
  }
}

TEST(BesselRatio, RejectsNegativeOrder) { EXPECT_THROW(bessel_ratio(-1, BigComplex(256), Precision{}), std::invalid_argument); }

TEST(BesselRatio, TruncationCap) {
  Precision prec;
  prec.truncation_cap = 8;
  EXPECT_THROW(bessel_ratio(0, BigComplex(10000, 256), prec), TruncationCapExceeded);
  SeriesStats stats;
  EXPECT_NO_THROW(bessel_ratio(0, BigComplex(BigRational(1, BigInt("100000000000000000000")), 256), prec, &stats));
  EXPECT_LE(stats.terms, 8);
}

TEST(ScaledBesselEntry, Examples) {
  const Precision prec;
  EXPECT_EQ(scaled_bessel_entry(0, BigComplex(3, 256), BigComplex(0, 256), prec), BigComplex(1, 256));
  EXPECT_TRUE(scaled_bessel_entry(1, BigComplex(1, 256), BigComplex(0, 256), prec).is_zero());
  const BigComplex v = scaled_bessel_entry(1, BigComplex(BigRational(1, 2), 256), BigComplex(1, 256), prec);
  const BigComplex oracle = BigComplex(BigRational(1, 2), 256) * partial_sum(1, BigRational(1, 4), 20, 256);
  // the 20-term oracle itself is only good to (1/4)^20/(20! 21!) ~ 7e-51
  EXPECT_LT(relative_difference(v, oracle).to_double(), 1e-49);
}

TEST(ScaledBesselEntry, OrderZeroIsBitIdenticalToBesselRatio) {
  const Precision prec;
  const BigComplex beta(BigRational(2, 3), BigRational(1, 5), 256);
  const BigComplex x(BigRational(-7, 3), BigRational(1, 9), 256);
  EXPECT_EQ(scaled_bessel_entry(0, beta, x, prec), bessel_ratio(0, beta * beta * x, prec));
}

TEST(ScaledBesselSeries, MatchesEntryAndDerivativeRule) {
  const Precision prec;
  const BigComplex beta(BigRational(3, 4), BigRational(-1, 3), 256);
  const BigComplex x(BigRational(5, 2), BigRational(1, 2), 256);
  for (long nu = 0; nu <= 4; ++nu) {
    const auto series = scaled_bessel_series(nu, beta, 288);
    EXPECT_LT(relative_difference(series.evaluate(x, prec), scaled_bessel_entry(nu, beta, x, prec)), tolerance(256, 8));
    if (nu >= 1) {
      // d/dx of the order-nu entry is beta times the order-(nu-1) entry
      const BigComplex d = series.taylor_coefficient(1, x, prec);
      EXPECT_LT(relative_difference(d, beta * scaled_bessel_entry(nu - 1, beta, x, prec)), tolerance(256, 8));
    }
  }
}

TEST(ScaledBesselSeries, TaylorCoefficientAtZero) {
  const Precision prec;
  const BigComplex beta(2, 256);
  const auto series = scaled_bessel_series(1, beta, 288);
  // coefficient of x^2 is beta^3/(1! 2!) = 4
  EXPECT_EQ(series.taylor_coefficient(2, BigComplex(0, 256), prec), BigComplex(4, 256));
  EXPECT_TRUE(series.taylor_coefficient(0, BigComplex(0, 256), prec).is_zero());
}

TEST(BkEntrySeries, MixedTaylorMatchesSingleVariable) {
  const Precision prec;
  const BigComplex beta(BigRational(1, 2), 256);
  const BigComplex x(BigRational(3, 2), 256);
  const BigComplex y(BigRational(-2, 3), BigRational(1, 4), 256);
  const auto in_x = bk_entry_series(beta, y, 288);
  for (long s = 0; s <= 3; ++s) {
    EXPECT_LT(relative_difference(bk_mixed_taylor(s, 0, beta, x, y, prec), in_x.taylor_coefficient(s, x, prec)),
              tolerance(256, 8));
  }
  EXPECT_LT(relative_difference(bk_mixed_taylor(0, 0, beta, x, y, prec), bessel_ratio(0, beta * beta * x * y, prec)),
            tolerance(256, 8));
  // symmetry in (s, x) <-> (t, y)
  EXPECT_LT(relative_difference(bk_mixed_taylor(2, 1, beta, x, y, prec), bk_mixed_taylor(1, 2, beta, y, x, prec)),
            tolerance(256, 8));
  EXPECT_TRUE(bk_mixed_taylor(0, 1, beta, BigComplex(0, 256), y, prec).is_zero());
}

TEST(PrecisionConfig, Validation) {
  Precision p;
  EXPECT_NO_THROW(p.validate());
  p.truncation_cap = 7;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = Precision{};
  p.bits = 32;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}
