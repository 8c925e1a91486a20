#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rfdress/besselx.hpp"
#include "rfdress/errors.hpp"

namespace {

using namespace rfdress::besselx;
constexpr double kPi = std::numbers::pi;

// Composite Simpson rule for (1/pi) int_0^pi cos(n t - x sin t - y sin 2t) dt,
// independent of the library's adaptive Gauss-Kronrod route.
double simpson_oracle(int n, double x, double y, int panels = 20000) {
  const double h = kPi / panels;
  auto f = [&](double t) { return std::cos(n * t - x * std::sin(t) - y * std::sin(2.0 * t)); };
  double s = f(0.0) + f(kPi);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0 / kPi;
}

// Standard-library Bessel J_n(x) extended to negative order and argument.
double std_bessel(int n, double x) {
  const int an = std::abs(n);
  double v = std::cyl_bessel_j(static_cast<double>(an), std::fabs(x));
  if (x < 0.0 && an % 2) v = -v;
  if (n < 0 && an % 2) v = -v;
  return v;
}

TEST(BesselJ, TrivialValues) {
  EXPECT_EQ(bessel_j(0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(3, 0.0), 0.0);
}

TEST(BesselJ, MatchesIntegralOracle) { EXPECT_NEAR(bessel_j(1, 1.0), simpson_oracle(1, 1.0, 0.0), 1e-12); }

TEST(BesselJ, MatchesStandardLibrary) {
  for (int n = -20; n <= 20; ++n) {
    for (double x : {-37.5, -3.0, -0.2, 0.01, 0.5, 1.0, 2.4048, 7.0, 19.9, 50.0, 120.0}) {
      EXPECT_NEAR(bessel_j(n, x), std_bessel(n, x), 1e-13) << "n=" << n << " x=" << x;
    }
  }
}

TEST(BesselJ, NegativeOrderParity) {
  for (int n = 1; n <= 12; ++n) {
    for (double x : {0.3, 4.0, 15.0}) EXPECT_EQ(bessel_j(-n, x), (n % 2 ? -1.0 : 1.0) * bessel_j(n, x));
  }
}

TEST(BesselTable, NormalizationSum) {
  for (double x : {0.1, 3.0, 30.0, 300.0}) {
    const BesselTable t(x, static_cast<int>(x) + 60);
    double s = t(0) * t(0);
    for (int k = 1; k <= t.max_order(); ++k) s += 2.0 * t(k) * t(k);
    EXPECT_NEAR(s, 1.0, 1e-13) << x;
  }
}

TEST(GenBesselSum, TrivialValues) {
  EXPECT_EQ(gen_bessel_sum({0, 0.0, 0.0}), 1.0);
  EXPECT_EQ(gen_bessel_sum({1, 0.0, 5.0}), 0.0);
}

TEST(GenBesselSum, DualMethodExample) {
  const GenBesselArgs a{2, 1.5, 0.7};
  EXPECT_NEAR(gen_bessel_sum(a), gen_bessel_integral(a), 1e-10);
  EXPECT_NEAR(gen_bessel_sum(a), simpson_oracle(2, 1.5, 0.7), 1e-10);
}

TEST(GenBesselSum, Reductions) {
  for (int n = -10; n <= 10; ++n) {
    for (double x : {0.1, 1.0, 10.0}) EXPECT_NEAR(gen_bessel_sum({n, x, 0.0}), std_bessel(n, x), 1e-12);
  }
  for (int m = -6; m <= 6; ++m) {
    for (double y : {0.2, 2.0, 9.0}) {
      EXPECT_NEAR(gen_bessel_sum({2 * m, 0.0, y}), std_bessel(m, y), 1e-12);
      EXPECT_EQ(gen_bessel_sum({2 * m + 1, 0.0, y}), 0.0);
    }
  }
}

TEST(GenBesselIntegral, ReducesToBesselJ) {
  for (int n = 0; n <= 10; ++n) {
    for (double x : {0.1, 1.0, 10.0}) EXPECT_NEAR(gen_bessel_integral({n, x, 0.0}), bessel_j(n, x), 1e-12);
  }
}

TEST(GenBesselIntegral, SignSymmetry) {
  for (int n = -4; n <= 4; ++n) {
    for (double x : {0.7, 5.0}) {
      for (double y : {-2.0, 0.3, 4.0}) {
        const double lhs = gen_bessel_integral({-n, -x, -y});
        EXPECT_NEAR(lhs, gen_bessel_integral({n, x, y}), 1e-12);
      }
    }
  }
}

TEST(GenBesselIntegral, ReportsErrorEstimate) {
  const auto r = gen_bessel_integral_detail({3, 8.0, 2.5});
  EXPECT_LE(r.error, 1e-12);
  EXPECT_NEAR(r.value, simpson_oracle(3, 8.0, 2.5), 1e-11);
}

TEST(GenBessel, OracleEquivalenceGrid) {
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const double x = -15.0 + 30.0 * i / 19.0;
      const double y = -8.0 + 16.0 * j / 19.0;
      for (int n = -5; n <= 5; ++n) {
        worst = std::max(worst, std::fabs(gen_bessel_sum({n, x, y}) - gen_bessel_integral({n, x, y})));
      }
    }
  }
  EXPECT_LT(worst, 1e-10);
}

TEST(GenBessel, NormalizationOverWideGrid) {
  for (double x = 0.0; x <= 60.0; x += 4.0) {
    for (double y = 0.0; y <= 30.0; y += 3.0) {
      const int h = static_cast<int>(std::ceil(std::fabs(x) + 2.0 * std::fabs(y))) + 40;
      double s = 0.0;
      for (double v : gen_bessel_orders(-h, h, x, y)) s += v * v;
      EXPECT_NEAR(s, 1.0, 1e-10) << "x=" << x << " y=" << y;
    }
  }
}

TEST(GenBessel, OrdersAgreeWithSinglePoint) {
  const auto v = gen_bessel_orders(-30, 30, 12.5, -4.25);
  for (int n = -30; n <= 30; ++n) EXPECT_NEAR(v[static_cast<std::size_t>(n + 30)], gen_bessel_sum({n, 12.5, -4.25}), 1e-14);
}

TEST(GenBessel, OddOrdersVanishAtZeroX) {
  for (double y : {0.1, 1.0, 7.3, 25.0}) {
    for (int n = -9; n <= 9; n += 2) {
      EXPECT_LT(std::fabs(gen_bessel_sum({n, 0.0, y})), 1e-14);
      EXPECT_LT(std::fabs(gen_bessel_integral({n, 0.0, y})), 1e-14);
    }
  }
}

// Quadratic-case arguments for a small RF amplitude: the leading term of the
// series grows as F_RF^|n|.
TEST(GenBessel, LeadingOrderPowerLaw) {
  const double alpha = 2.0 * kPi * 347.04, w = 2.0 * kPi * 8.0, fs = 0.2;
  auto amp = [&](int n, double fr) {
    return std::fabs(gen_bessel_sum({n, alpha * fr * fs / w, alpha * fr * fr / (8.0 * w)}));
  };
  for (int n : {-4, -3, -2, -1, 1, 2, 3, 4}) {
    const double f1 = 1e-4, f2 = 1e-2;
    const double slope = std::log(amp(n, f2) / amp(n, f1)) / std::log(f2 / f1);
    EXPECT_NEAR(slope, std::abs(n), 0.05) << n;
  }
}

TEST(GenBessel, TruncationCoversBothBounds) {
  EXPECT_GE(gen_bessel_terms(0, 0.0, 27.0), static_cast<int>(27.0 + 3.0 * std::cbrt(27.0) + 3.0));
  EXPECT_GE(gen_bessel_terms(-10, 64.0, 0.0), static_cast<int>((10 + 64.0 + 12.0 + 3.0) / 2.0));
}

TEST(GenBessel, RejectsNonFinite) {
  EXPECT_THROW(gen_bessel_sum({0, NAN, 0.0}), rfdress::DomainError);
}

}  // namespace
