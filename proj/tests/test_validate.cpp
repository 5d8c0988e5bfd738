#include "support.hpp"

#include <casimir/validate.hpp>

#include <cmath>
#include <sstream>

using namespace casimir;
using namespace casimir::validate;

TEST(Fixtures, ParseRecords) {
  std::istringstream in("# comment\n\nlattice_g z=1 cutoff=200 value=-1.5e-4 tol=1e-9\n");
  const auto fx = parse_fixtures(in);
  ASSERT_EQ(fx.size(), 1u);
  EXPECT_EQ(fx[0].name, "lattice_g");
  EXPECT_DOUBLE_EQ(fx[0].number("z"), 1.0);
  EXPECT_DOUBLE_EQ(fx[0].value, -1.5e-4);
  EXPECT_DOUBLE_EQ(fx[0].tol, 1e-9);
  EXPECT_EQ(fx[0].label(), "lattice_g cutoff=200 z=1");
  EXPECT_THROW(fx[0].number("missing"), FixtureError);
}

TEST(Fixtures, RejectMalformedLines) {
  for (const char* bad : {"x a=1 tol=1\n", "x a=1 value=2\n", "x a=1 value=abc tol=1\n", "x =3 value=1 tol=1\n"}) {
    std::istringstream in(bad);
    EXPECT_THROW(parse_fixtures(in), FixtureError) << bad;
  }
  EXPECT_THROW(load_fixtures("/nonexistent/fixtures.txt"), FixtureError);
}

TEST(Fixtures, RepositoryFileIsComplete) {
  const auto& fx = fx::fixtures();
  EXPECT_GE(fx.size(), 36u);
  for (const auto& f : fx) {
    EXPECT_GT(f.tol, 0.0) << f.line;
    EXPECT_TRUE(std::isfinite(f.value)) << f.line;
  }
}

TEST(OracleBessel, ClosedFormAndLibrary) {
  EXPECT_REL(oracle_bessel_k(0.5, 1.0), std::sqrt(constants::pi / 2.0) * std::exp(-1.0), 1e-13);
  for (double x : {0.01, 0.7, 5.0, 49.0})
    EXPECT_REL(oracle_bessel_k(1.0, x), static_cast<double>(std::cyl_bessel_k(1.0L, static_cast<long double>(x))),
               1e-13);
}

TEST(OracleBessel, Domain) {
  EXPECT_THROW(oracle_bessel_k(1.0, 0.001), DomainError);
  EXPECT_THROW(oracle_bessel_k(1.0, 51.0), DomainError);
}

TEST(OracleLattice, CertifiesOrRefuses) {
  const double z10[] = {10.0};
  EXPECT_LT(std::abs(oracle_lattice(LatticeKind::G, z10, 5)), 1e-25);
  const double small[] = {0.01};
  EXPECT_THROW(oracle_lattice(LatticeKind::G, small, 5), OracleError);
  const double beta[] = {0.05, 0.05, 0.05};
  EXPECT_THROW(oracle_lattice(LatticeKind::XScalar, beta, 10), OracleError);
  const double two[] = {1.0, 2.0};
  EXPECT_THROW(oracle_lattice(LatticeKind::G, two, 10), DomainError);
  EXPECT_THROW(oracle_lattice(LatticeKind::G, z10, 0), DomainError);
}

TEST(OracleLattice, ReproducesPinnedValues) {
  const auto& f = fx::fixture("x_scalar beta_a=6.283185307179586 beta_b=6.283185307179586 "
                                   "beta_c=6.283185307179586 cutoff=50");
  const double b[] = {f.number("beta_a"), f.number("beta_b"), f.number("beta_c")};
  EXPECT_REL(oracle_lattice(LatticeKind::XScalar, b, 50), f.value, 1e-12);
}

TEST(ThermoConsistency, ReportsSmallDeviation) {
  const auto r = oracle_thermo_consistency(BoxGeometry::cube(2e-6), FieldKind::Electromagnetic,
                                           ThermalPoint::from_kelvin(300.0), 1e-3);
  EXPECT_LE(r.max_rel_deviation, 1e-4);
  EXPECT_REL(r.internal_energy_fd, r.internal_energy, 1e-4);
  EXPECT_REL(r.entropy_fd, r.entropy, 1e-4);
}

TEST(Runner, FreshCheckoutPasses) {
  std::ostringstream out;
  const auto s = run_validation(fx::fixtures(), "", out);
  EXPECT_TRUE(s.ok()) << out.str();
  EXPECT_EQ(s.failed, 0);
}

TEST(Runner, FilterSelectsGroup) {
  std::ostringstream out;
  const auto s = run_validation(fx::fixtures(), "plates", out);
  EXPECT_TRUE(s.ok());
  std::istringstream lines(out.str());
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0) {
      EXPECT_NE(line.find("plates"), std::string::npos) << line;
      ++n;
    }
  }
  EXPECT_EQ(n, s.passed);
  EXPECT_GE(n, 5);
}

TEST(Runner, PerturbedFixtureFails) {
  auto fx = fx::fixtures();
  for (auto& f : fx)
    if (f.label() == "lattice_g cutoff=200 z=1") f.value *= 1.0 + 1e-6;
  std::ostringstream out;
  const auto s = run_validation(fx, "lattice_g", out);
  EXPECT_FALSE(s.ok());
  EXPECT_EQ(s.failed, 2) << out.str();
  EXPECT_NE(out.str().find("FAIL lattice: lattice_g cutoff=200 z=1"), std::string::npos);
}
