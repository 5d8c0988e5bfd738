#include "support.hpp"

#include <casimir/lattice.hpp>
#include <casimir/shells.hpp>
#include <casimir/thermal.hpp>
#include <casimir/validate.hpp>

#include <cmath>

using namespace casimir;

namespace {
constexpr double tol = 1e-10;
}

TEST(LatticeG, MatchesBruteForceFixtures) {
  for (const auto& f : fx::fixtures_named("lattice_g")) {
    SCOPED_TRACE(f.label());
    EXPECT_REL(lattice_g(f.number("z"), tol), f.value, f.tol);
  }
}

TEST(LatticeG, ExponentiallySmallForLargeArgument) { EXPECT_LT(std::abs(lattice_g(10.0, tol)), 1e-25); }

TEST(LatticeG, LooserToleranceStaysWithinIt) {
  const double fine = lattice_g(0.3, 1e-13);
  EXPECT_REL(lattice_g(0.3, 1e-6), fine, 1e-6);
}

TEST(LatticeG, BelowFloorIsConvergenceError) {
  EXPECT_THROW(lattice_g(1e-5, tol), ConvergenceError);
  EXPECT_THROW(lattice_g(0.0, tol), DomainError);
  EXPECT_THROW(lattice_g(-1.0, tol), DomainError);
}

TEST(LatticeR, MatchesBruteForceFixtures) {
  for (const auto& f : fx::fixtures_named("lattice_r")) {
    SCOPED_TRACE(f.label());
    EXPECT_REL(lattice_r(f.number("z1"), f.number("z2"), tol), f.value, f.tol);
  }
}

TEST(LatticeR, SymmetricInArguments) { EXPECT_REL(lattice_r(1.0, 2.0, tol), lattice_r(2.0, 1.0, tol), 1e-12); }

TEST(LatticeR, AgreesWithExtendedPrecisionOracle) {
  const double p[] = {1.0, 1.0};
  EXPECT_REL(lattice_r(1.0, 1.0, tol), validate::oracle_lattice(validate::LatticeKind::R, p, 100), 1e-9);
  const double q[] = {0.2, 3.0};
  EXPECT_REL(lattice_r(0.2, 3.0, tol), validate::oracle_lattice(validate::LatticeKind::R, q, 100), 1e-9);
}

TEST(LatticeR, BelowFloorIsConvergenceError) {
  EXPECT_THROW(lattice_r(1e-5, 1.0, tol), ConvergenceError);
  EXPECT_THROW(lattice_r(1.0, 0.0, tol), DomainError);
}

TEST(ModeSums, MatchBruteForceFixtures) {
  for (const auto& name : {"x_scalar", "y_em"}) {
    for (const auto& f : fx::fixtures_named(name)) {
      SCOPED_TRACE(f.label());
      const auto field = f.name == "x_scalar" ? FieldKind::ScalarDirichlet : FieldKind::Electromagnetic;
      EXPECT_REL(reduced_log_sum(field, {f.number("beta_a"), f.number("beta_b"), f.number("beta_c")}), f.value, f.tol);
    }
  }
}

TEST(ModeSums, AgreeWithOracleOffFixtureGrid) {
  const double b[] = {0.9, 2.0, 1.3};
  EXPECT_REL(reduced_log_sum(FieldKind::ScalarDirichlet, {b[0], b[1], b[2]}),
             validate::oracle_lattice(validate::LatticeKind::XScalar, b, 120), 1e-9);
  EXPECT_REL(reduced_log_sum(FieldKind::Electromagnetic, {b[0], b[1], b[2]}),
             validate::oracle_lattice(validate::LatticeKind::YEm, b, 120), 1e-9);
}

TEST(OrthantShellSum, OneDimensionalGeometricSeries) {
  const double beta = 0.37;
  const double s = orthant_shell_sum<1>(
      {beta}, [](const std::array<std::int64_t, 1>&, double x) { return std::exp(-x); }, {1.0, 0}, {}, "geometric");
  EXPECT_REL(s, std::exp(-beta) / -std::expm1(-beta), 1e-10);
}

TEST(OrthantShellSum, VisitsEveryPointOnce) {
  // sum over n, l >= 1 of e^{-(b1 n + b2 l)} factorizes; the term ignores x.
  const std::array<double, 2> b{0.8, 1.7};
  const double s = orthant_shell_sum<2>(
      b,
      [&](const std::array<std::int64_t, 2>& i, double) {
        return std::exp(-(b[0] * static_cast<double>(i[0]) + b[1] * static_cast<double>(i[1])));
      },
      {1.0, 0}, {.rel_tol = 1e-13}, "product");
  const auto geo = [](double r) { return std::exp(-r) / -std::expm1(-r); };
  EXPECT_REL(s, geo(b[0]) * geo(b[1]), 1e-12);
}

TEST(OrthantShellSum, BudgetExhaustionIsConvergenceError) {
  ShellSumOptions opt;
  opt.max_points = 1000;
  try {
    orthant_shell_sum<3>(
        {0.01, 0.01, 0.01}, [](const std::array<std::int64_t, 3>&, double x) { return std::log1p(-std::exp(-x)); },
        {1.0, 0}, opt, "tiny budget");
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.series(), "tiny budget");
  }
}

TEST(OrthantShellSum, RejectsNonPositiveFrequencies) {
  EXPECT_THROW(orthant_shell_sum<2>(
                   {1.0, 0.0}, [](const std::array<std::int64_t, 2>&, double) { return 0.0; }, {}, {}, "bad"),
               DomainError);
}
