#include "support.hpp"

#include <casimir/boxzero.hpp>
#include <casimir/validate.hpp>

#include <cmath>
#include <random>

using namespace casimir;

namespace {

std::vector<BoxGeometry> random_boxes(int n, double lo, double hi, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<BoxGeometry> out;
  for (int i = 0; i < n; ++i) out.emplace_back(std::exp(u(rng)), std::exp(u(rng)), std::exp(u(rng)));
  return out;
}

double oracle_e0_scalar(const BoxGeometry& g) {
  using validate::LatticeKind;
  const double a = g.a(), b = g.b(), c = g.c();
  const double pi = constants::pi;
  const double gb[] = {b / a}, gc[] = {c / a}, r[] = {b / a, c / a};
  return -pi * pi * b * c / (1440 * a * a * a) + constants::zeta3 * (b + c) / (32 * pi * a * a) - pi / (96 * a) -
         pi / (2 * a) *
             (validate::oracle_lattice(LatticeKind::G, gb, 200) + validate::oracle_lattice(LatticeKind::G, gc, 200)) -
         validate::oracle_lattice(LatticeKind::R, r, 100) / a;
}

double oracle_e0_em(const BoxGeometry& g) {
  using validate::LatticeKind;
  const double a = g.a(), b = g.b(), c = g.c();
  const double pi = constants::pi;
  const double gcb[] = {c / b}, r[] = {b / a, c / a};
  return -pi * pi * b * c / (720 * a * a * a) - constants::zeta3 * c / (16 * pi * b * b) + pi / 48 * (1 / a + 1 / b) +
         pi / b * validate::oracle_lattice(LatticeKind::G, gcb, 200) -
         2 / a * validate::oracle_lattice(LatticeKind::R, r, 100);
}

} // namespace

TEST(E0, MatchesPinnedValues) {
  for (const auto& name : {"e0_scalar", "e0_em"}) {
    for (const auto& f : fx::fixtures_named(name)) {
      SCOPED_TRACE(f.label());
      const BoxGeometry g(f.number("a"), f.number("b"), f.number("c"));
      EXPECT_REL(f.name == "e0_scalar" ? e0_scalar(g) : e0_em(g), f.value, f.tol);
    }
  }
}

TEST(E0, ScalarCube) {
  // The cube value implied by the energy formula; independently confirmed by
  // an Epstein zeta evaluation.
  EXPECT_NEAR(e0_scalar(BoxGeometry::cube(1.0)), -0.015732182509969577, 1e-12);
}

TEST(E0, ElectromagneticCube) { EXPECT_NEAR(e0_em(BoxGeometry::cube(1.0)), 0.09166, 5e-4); }

TEST(E0, HomogeneousOfDegreeMinusOne) {
  for (const auto& g : random_boxes(6, 0.3, 3.0, 11)) {
    for (double lambda : {0.5, 2.0, 10.0}) {
      for (auto field : {FieldKind::ScalarDirichlet, FieldKind::Electromagnetic}) {
        EXPECT_REL(e0(g.scaled(lambda), field), e0(g, field) / lambda, 1e-10);
      }
    }
  }
}

TEST(E0, ScalarSymmetricUnderBC) {
  for (const auto& g : random_boxes(6, 0.3, 3.0, 12))
    EXPECT_REL(e0_scalar(BoxGeometry(g.a(), g.c(), g.b())), e0_scalar(g), 1e-12);
}

TEST(E0, ElectromagneticInvariantUnderPermutations) {
  for (const auto& g : random_boxes(4, 0.3, 3.0, 13)) {
    const double a = g.a(), b = g.b(), c = g.c();
    const double ref = e0_em(g);
    for (const auto& p : {BoxGeometry(a, c, b), BoxGeometry(b, a, c), BoxGeometry(b, c, a), BoxGeometry(c, a, b),
                          BoxGeometry(c, b, a)}) {
      EXPECT_REL(e0_em(p), ref, 1e-10);
    }
  }
}

TEST(E0, AgreesWithExtendedPrecisionOracle) {
  const auto boxes = random_boxes(10, 0.5, 2.0, 14);
  for (const auto& g : boxes) {
    EXPECT_REL(e0_scalar(g), oracle_e0_scalar(g), 1e-8);
    EXPECT_REL(e0_em(g), oracle_e0_em(g), 1e-8);
  }
}

TEST(E0, ScalarNegativeForModerateAspectRatios) {
  for (const auto& g : random_boxes(30, 1.0, 4.0, 15)) EXPECT_LT(e0_scalar(g), 0.0);
  EXPECT_LT(e0_scalar(BoxGeometry(1.0, 100.0, 100.0)), 0.0);
}

TEST(E0, ScalarPositiveForLongBoxes) {
  for (double a : {5.0, 10.0, 100.0}) EXPECT_GT(e0_scalar(BoxGeometry(a, 1.0, 1.0)), 0.0);
}

TEST(E0, ElectromagneticZerosForSquareCrossSection) {
  const auto e = [](double a) { return e0_em(BoxGeometry(a, 10.0, 10.0)); };
  EXPECT_LT(e(2.942), 0.0);
  EXPECT_LT(e(4.0), 0.0);
  EXPECT_GT(e(4.2), 0.0);
  EXPECT_GT(e(33.9), 0.0);
  EXPECT_LT(e(34.6), 0.0);
}

TEST(Force, ScalarCubeIsOneThirdOfEnergy) {
  const double a = 1.7;
  const double f = e0_force_x(BoxGeometry::cube(a), FieldKind::ScalarDirichlet);
  EXPECT_REL(a * a * f, a * e0_scalar(BoxGeometry::cube(a)) / 3.0, 1e-8);
  EXPECT_NEAR(a * a * f, -0.0052440608, 1e-9);
}

TEST(Force, ElectromagneticCube) {
  EXPECT_NEAR(e0_force_x(BoxGeometry::cube(1.0), FieldKind::Electromagnetic), 0.03055, 3e-4);
}

TEST(Force, CubeFacesAgree) {
  const auto g = BoxGeometry::cube(1.3);
  for (auto field : {FieldKind::ScalarDirichlet, FieldKind::Electromagnetic}) {
    const double da = e0_side_derivative(g, field, Side::A);
    EXPECT_REL(e0_side_derivative(g, field, Side::B), da, 1e-6);
    EXPECT_REL(e0_side_derivative(g, field, Side::C), da, 1e-6);
  }
}

TEST(Force, EulerIdentity) {
  for (const auto& g : random_boxes(5, 0.5, 2.0, 16)) {
    for (auto field : {FieldKind::ScalarDirichlet, FieldKind::Electromagnetic}) {
      const double lhs = g.a() * e0_side_derivative(g, field, Side::A) +
                         g.b() * e0_side_derivative(g, field, Side::B) +
                         g.c() * e0_side_derivative(g, field, Side::C);
      EXPECT_REL(lhs, -e0(g, field), 1e-4);
    }
  }
}

TEST(Richardson, DisagreementRaisesDerivativeError) {
  const auto kink = [](double x) { return std::abs(x); };
  EXPECT_THROW(checked_derivative(kink, 1e-5, 1e-4, 1.0, 1e-5, "kink"), DerivativeError);
  EXPECT_NEAR(checked_derivative([](double x) { return x * x * x; }, 2.0, 1e-3, 12.0, 1e-5, "cube"), 12.0, 1e-9);
}

TEST(Geometry, Validation) {
  EXPECT_THROW(BoxGeometry(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(BoxGeometry(1.0, -1.0, 1.0), DomainError);
  EXPECT_THROW(BoxGeometry(1.0, 1.0, INFINITY), DomainError);
  EXPECT_THROW(BoxGeometry(1.0, 1e7, 1.0), DomainError);
  EXPECT_NO_THROW(BoxGeometry(1.0, 1e5, 1.0));
  const BoxGeometry g(1.0, 2.0, 3.0);
  EXPECT_DOUBLE_EQ(g.volume(), 6.0);
  EXPECT_DOUBLE_EQ(g.surface_area(), 22.0);
  EXPECT_DOUBLE_EQ(g.side_sum(), 6.0);
}
