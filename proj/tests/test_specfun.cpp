#include "support.hpp"

#include <casimir/specfun.hpp>
#include <casimir/validate.hpp>

#include <cmath>

using namespace casimir;

TEST(BesselK, HalfOrderClosedForm) {
  EXPECT_REL(bessel_k(0.5, 2.0), std::sqrt(constants::pi / 4.0) * std::exp(-2.0), 1e-15);
  EXPECT_NEAR(bessel_k(0.5, 2.0), 0.11993777, 1e-8);
}

TEST(BesselK, ThreeHalvesClosedForm) {
  EXPECT_REL(bessel_k(1.5, 1.0), std::sqrt(constants::pi / 2.0) * std::exp(-1.0) * 2.0, 1e-15);
  EXPECT_NEAR(bessel_k(1.5, 1.0), 0.92213701, 1e-8);
}

TEST(BesselK, MatchesPinnedQuadratureValues) {
  const auto fx = fx::fixtures_named("bessel_k");
  ASSERT_EQ(fx.size(), 12u);
  for (const auto& f : fx) {
    SCOPED_TRACE(f.label());
    EXPECT_REL(bessel_k(f.number("order"), f.number("x")), f.value, f.tol);
  }
}

TEST(BesselK, K1AtOne) {
  EXPECT_REL(bessel_k(BesselOrder::One, 1.0), fx::fixture("bessel_k oracle=quadrature order=1 x=1").value, 1e-12);
}

TEST(BesselK, AgreesWithIntegralRepresentation) {
  for (double nu : {0.5, 1.0, 1.5}) {
    for (int i = 0; i < 20; ++i) {
      const double x = 0.01 * std::pow(5000.0, i / 19.0);
      SCOPED_TRACE("nu=" + std::to_string(nu) + " x=" + std::to_string(x));
      EXPECT_REL(bessel_k(nu, x), validate::oracle_bessel_k(nu, x), 1e-11);
    }
  }
}

TEST(BesselK, AgreesWithStdLibraryOverFullRange) {
  for (double nu : {0.5, 1.0, 1.5}) {
    for (int i = 0; i <= 60; ++i) {
      const double x = 1e-6 * std::pow(7e8, i / 60.0);
      SCOPED_TRACE("nu=" + std::to_string(nu) + " x=" + std::to_string(x));
      const auto ref = static_cast<double>(std::cyl_bessel_k(static_cast<long double>(nu), static_cast<long double>(x)));
      EXPECT_REL(bessel_k(nu, x), ref, 1e-12);
    }
  }
}

TEST(BesselK, HalfIntegerRecurrence) {
  for (double x : {0.01, 0.3, 1.0, 4.0, 17.0, 90.0}) {
    EXPECT_REL(bessel_k(1.5, x), bessel_k(0.5, x) * (1.0 + 1.0 / x), 1e-13);
  }
}

TEST(BesselK, StrictlyDecreasing) {
  for (double nu : {0.5, 1.0, 1.5}) {
    double prev = bessel_k(nu, 1e-3);
    for (int i = 1; i <= 400; ++i) {
      const double x = 1e-3 + 0.5 * i;
      const double v = bessel_k(nu, x);
      EXPECT_LT(v, prev) << "nu=" << nu << " x=" << x;
      prev = v;
    }
  }
}

TEST(BesselK, K1SeriesAndContinuedFractionAgreeAtSeam) {
  const double x = detail::k1_seam;
  const double cf = detail::k01_scaled_cf(x).second * std::exp(-x);
  EXPECT_REL(detail::k1_series(x), cf, 1e-12);
}

TEST(BesselK, UnderflowsToExactZero) {
  EXPECT_GT(bessel_k(1.0, 700.0), 0.0);
  EXPECT_EQ(bessel_k(1.0, 746.0), 0.0);
  EXPECT_EQ(bessel_k(1.5, 1e4), 0.0);
  EXPECT_GT(bessel_k_scaled(BesselOrder::One, 1e4), 0.0);
}

TEST(BesselK, DomainErrors) {
  EXPECT_THROW(bessel_k(1.0, 0.0), DomainError);
  EXPECT_THROW(bessel_k(1.0, -1.0), DomainError);
  EXPECT_THROW(bessel_k(2.0, 1.0), DomainError);
  EXPECT_THROW(bessel_k(0.0, 1.0), DomainError);
}

TEST(ExpTailBound, GeometricExamples) {
  EXPECT_NEAR(exp_tail_bound(1.0, 1.0, 10), 7.1825e-5, 1e-8);
  EXPECT_NEAR(exp_tail_bound(2.0, 0.5, 0), 5.0830, 1e-4);
}

TEST(ExpTailBound, BoundsDirectPartialSums) {
  for (auto [p, r, s] : {std::tuple{1.0, 1.0, 10}, std::tuple{3.0, 0.01, 0}, std::tuple{0.5, 2.5, 3}}) {
    CompensatedSum<double> direct;
    for (int n = s; n < s + 1'000'000; ++n) direct += p * std::exp(-r * n);
    EXPECT_GE(exp_tail_bound(p, r, s) * (1 + 1e-14), direct.value());
  }
}

TEST(ExpTailBound, RejectsNonPositiveRate) {
  EXPECT_THROW(exp_tail_bound(1.0, 0.0, 1), DomainError);
  EXPECT_THROW(exp_tail_bound(1.0, -1.0, 1), DomainError);
}

TEST(Constants, Values) {
  EXPECT_DOUBLE_EQ(constants::zeta3, 1.2020569031595942);
  EXPECT_DOUBLE_EQ(constants::hbar_c, 1.054571817e-34 * 299792458.0);
  EXPECT_DOUBLE_EQ(constants::k_boltzmann, 1.380649e-23);
}

TEST(CompensatedSum, RecoversCancelledLowOrderBits) {
  CompensatedSum<double> s;
  s += 1.0;
  s += 1e-16;
  s += -1.0;
  EXPECT_DOUBLE_EQ(s.value(), 1e-16);
}
