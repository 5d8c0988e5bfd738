#pragma once

// Independent reference evaluations and the validation runner.
//
// The oracles deliberately avoid the production code paths: Bessel functions
// come from quadrature of the integral representation or from
// std::cyl_bessel_k, lattice and mode sums are plain nested loops over a box
// of indices in long double, and derivatives are finite differences.

#include <casimir/boxzero.hpp>
#include <casimir/constants.hpp>
#include <casimir/error.hpp>
#include <casimir/lattice.hpp>
#include <casimir/plates.hpp>
#include <casimir/richardson.hpp>
#include <casimir/specfun.hpp>
#include <casimir/summation.hpp>
#include <casimir/thermal.hpp>
#include <casimir/units.hpp>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace casimir::validate {

/// An oracle could not certify its own result (quadrature did not converge,
/// or the index cutoff leaves too large a tail).
class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FixtureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// --- Bessel functions by quadrature ----------------------------------------

inline constexpr double oracle_bessel_abs_tol = 1e-14;

/// K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du, by adaptive
/// Gauss-Kronrod quadrature in long double. x must lie in [0.01, 50].
inline double oracle_bessel_k(double nu, double x) {
  if (!(x >= 0.01 && x <= 50.0)) throw DomainError("oracle_bessel_k: x must lie in [0.01, 50]");
  if (!(nu >= 0.0 && nu <= 10.0)) throw DomainError("oracle_bessel_k: order must lie in [0, 10]");
  using boost::math::quadrature::gauss_kronrod;
  const long double xl = x;
  const long double nul = nu;
  const auto f = [&](long double u) { return std::exp(-xl * std::cosh(u)) * std::cosh(nul * u); };
  // Past u_max the integrand is below e^{-250} of its value at u = 0.
  const long double u_max = std::acosh(250.0L / xl + 1.0L) + 2.0L;
  long double err = 0;
  const long double v = gauss_kronrod<long double, 61>::integrate(f, 0.0L, u_max, 20, 1e-18L, &err);
  if (!(err <= oracle_bessel_abs_tol)) {
    throw OracleError("oracle_bessel_k: quadrature error estimate " + std::to_string(static_cast<double>(err)) +
                      " exceeds 1e-14");
  }
  return static_cast<double>(v);
}

// --- brute-force lattice and mode sums -------------------------------------

enum class LatticeKind { G, R, XScalar, YEm };

inline constexpr double oracle_cutoff_rel = 1e-12;

namespace detail {

/// Terms whose exponent exceeds this are not evaluated; they are covered by
/// the tail bound along with the points outside the index box.
inline constexpr long double oracle_skip_x = 200.0L;

/// sum_{u,v >= 1} u v e^{-c u v} <= e^{-c} / (1 - e^{-c})^4.
inline long double pair_moment_bound(long double c) {
  const long double q = std::exp(-c);
  const long double om = -std::expm1(-c);
  return q / (om * om * om * om);
}

inline void certify(const char* what, long double sum, long double tail) {
  if (!(tail <= oracle_cutoff_rel * std::abs(sum))) {
    throw OracleError(std::string(what) + ": cutoff insufficient, tail bound " +
                      std::to_string(static_cast<double>(tail)) + " vs sum " + std::to_string(static_cast<double>(sum)));
  }
}

inline long double oracle_g(long double z, long long cutoff) {
  const long double k = 2.0L * std::numbers::pi_v<long double> * z;
  long double s = 0;
  for (long long n = 1; n <= cutoff; ++n) {
    for (long long l = 1; l <= cutoff; ++l) {
      const long double x = k * n * l;
      if (x > oracle_skip_x) break;
      s += static_cast<long double>(n) / l * std::cyl_bessel_k(1.0L, x);
    }
  }
  // Omitted points have x >= x_o; with e^x K_1(x) decreasing from x = k and
  // n/l <= n l, each is at most C n l e^{-x_o/2} e^{-k n l / 2}.
  const long double x_o = std::min(oracle_skip_x, k * (cutoff + 1));
  const long double c = std::exp(k) * std::cyl_bessel_k(1.0L, k);
  certify("oracle_lattice(G)", s, c * std::exp(-x_o / 2) * pair_moment_bound(k / 2));
  return -s / (2.0L * std::numbers::pi_v<long double>);
}

inline long double oracle_r(long double z1, long double z2, long long cutoff) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double s = 0;
  for (long long l = -cutoff; l <= cutoff; ++l) {
    for (long long p = -cutoff; p <= cutoff; ++p) {
      if (l == 0 && p == 0) continue;
      const long double r = std::sqrt(l * l * z1 * z1 + p * p * z2 * z2);
      for (long long j = 1; j <= cutoff; ++j) {
        const long double x = two_pi * j * r;
        if (x > oracle_skip_x) break;
        s += std::pow(j / r, 1.5L) * std::cyl_bessel_k(1.5L, x);
      }
    }
  }
  // Each term equals j e^{-x}(1 + 1/x)/(2 r^2); r >= r_min (|l| + |p|)/sqrt 2
  // and 4 s index pairs have |l| + |p| = s.
  const long double r_min = std::min(z1, z2);
  const long double x_o = std::min(oracle_skip_x, two_pi * (cutoff + 1) * r_min);
  const long double kappa = two_pi * r_min / std::sqrt(2.0L);
  const long double amp = (1.0L + 1.0L / (two_pi * r_min)) / (2.0L * r_min * r_min);
  certify("oracle_lattice(R)", s, amp * std::exp(-x_o / 2) * 4.0L * pair_moment_bound(kappa / 2));
  return z1 * z2 / 8.0L * s;
}

/// sum over n_i in [1, cutoff] of ln(1 - e^{-x}), x = |beta o n|.
template <std::size_t D>
long double oracle_orthant_log(const std::array<long double, D>& beta, long long cutoff, long double& tail) {
  long double s = 0;
  long double xmin2 = 0;
  for (auto b : beta) xmin2 += b * b;
  std::array<long long, D> n{};
  n.fill(1);
  for (;;) {
    long double x2 = 0;
    for (std::size_t i = 0; i < D; ++i) x2 += beta[i] * beta[i] * n[i] * n[i];
    const long double x = std::sqrt(x2);
    if (x <= oracle_skip_x) s += std::log1p(-std::exp(-x));
    std::size_t i = D;
    while (i > 0) {
      --i;
      if (++n[i] <= cutoff) break;
      n[i] = 1;
      if (i == 0) {
        i = D + 1;
        break;
      }
    }
    if (i == D + 1) break;
  }
  // |ln(1 - e^{-x})| <= e^{-x}/(1 - e^{-x_min}); omitted points have
  // x >= x_o, and x >= sum_i beta_i n_i / sqrt(D).
  long double x_o = oracle_skip_x;
  long double prod = 1;
  for (auto b : beta) {
    x_o = std::min(x_o, b * (cutoff + 1));
    prod /= std::expm1(b / (2.0L * std::sqrt(static_cast<long double>(D))));
  }
  tail += std::exp(-x_o / 2) * prod / -std::expm1(-std::sqrt(xmin2));
  return s;
}

} // namespace detail

/// Direct evaluation with every index in [1, cutoff] (R: l, p in [-cutoff,
/// cutoff], j in [1, cutoff]). Params: G {z}, R {z1, z2}, X and Y
/// {beta_a, beta_b, beta_c}. Throws OracleError if the certified tail bound
/// exceeds 1e-12 of the partial sum.
inline double oracle_lattice(LatticeKind kind, std::span<const double> params, long long cutoff) {
  if (cutoff < 1) throw DomainError("oracle_lattice: cutoff must be >= 1");
  const auto need = [&](std::size_t k) {
    if (params.size() != k) throw DomainError("oracle_lattice: wrong number of parameters");
    for (double v : params)
      if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("oracle_lattice: parameters must be positive");
  };
  switch (kind) {
  case LatticeKind::G: need(1); return static_cast<double>(detail::oracle_g(params[0], cutoff));
  case LatticeKind::R: need(2); return static_cast<double>(detail::oracle_r(params[0], params[1], cutoff));
  case LatticeKind::XScalar:
  case LatticeKind::YEm: {
    need(3);
    const long double ba = params[0], bb = params[1], bc = params[2];
    long double tail = 0;
    long double s = detail::oracle_orthant_log<3>({ba, bb, bc}, cutoff, tail);
    if (kind == LatticeKind::YEm) {
      tail *= 2;
      s *= 2;
      s += detail::oracle_orthant_log<2>({bb, bc}, cutoff, tail);
      s += detail::oracle_orthant_log<2>({ba, bb}, cutoff, tail);
      s += detail::oracle_orthant_log<2>({ba, bc}, cutoff, tail);
    }
    detail::certify(kind == LatticeKind::YEm ? "oracle_lattice(Y)" : "oracle_lattice(X)", s, tail);
    return static_cast<double>(s);
  }
  }
  throw DomainError("oracle_lattice: unknown kind");
}

// --- thermodynamic consistency ----------------------------------------------

struct ThermoConsistencyReport {
  double internal_energy;    // term-wise analytic U
  double internal_energy_fd; // F + kT S_fd
  double entropy;            // (U - F)/kT, units of k_B
  double entropy_fd;         // -dF/d(kT) by finite differences
  double max_rel_deviation;
};

/// Compares U and S with central differences of F in kT (relative step h,
/// one Richardson level).
inline ThermoConsistencyReport oracle_thermo_consistency(const BoxGeometry& g, FieldKind field, const ThermalPoint& tp,
                                                         double h, const ToleranceConfig& cfg = {}) {
  if (tp.is_zero()) throw DomainError("oracle_thermo_consistency: requires T > 0");
  const double kT = tp.kT();
  // E0 does not depend on T; differentiating the thermal part alone keeps
  // the differences free of its rounding.
  const auto thermal_f = [&](double t) {
    const auto e = free_energy(g, field, ThermalPoint(t), cfg);
    return e.thermal_raw + e.bb_term + e.alpha1_term + e.alpha2_term;
  };
  const auto st = thermodynamics(g, field, tp, cfg);
  const double s_fd = -richardson_derivative(thermal_f, kT, h * kT, 0.0).value;
  const double u_fd = st.free.total + kT * s_fd;
  const double dev_u = std::abs(u_fd - st.internal_energy) / std::abs(st.internal_energy);
  const double dev_s = std::abs(s_fd - st.entropy) / std::abs(st.entropy);
  return {st.internal_energy, u_fd, st.entropy, s_fd, std::max(dev_u, dev_s)};
}

struct PressureConsistencyReport {
  double pressure;    // plates_pressure
  double pressure_fd; // five-point stencil of -dF/da
  double rel_deviation;
};

inline PressureConsistencyReport oracle_plates_pressure_consistency(const PlatesConfig& p, double h,
                                                                    const ToleranceConfig& cfg = {}) {
  const double a = p.separation;
  const double step = h * a;
  const auto f = [&](double s) { return plates_free_energy(p.with_separation(s), cfg); };
  const double d = (-f(a + 2 * step) + 8 * f(a + step) - 8 * f(a - step) + f(a - 2 * step)) / (12 * step);
  const double pr = plates_pressure(p, cfg);
  return {pr, -d, std::abs(pr + d) / std::abs(pr)};
}

// --- fixtures ---------------------------------------------------------------

struct Fixture {
  std::string name;
  std::map<std::string, std::string, std::less<>> params;
  double value = 0.0;
  double tol = 0.0;
  std::string line;

  const std::string& text(std::string_view key) const {
    const auto it = params.find(key);
    if (it == params.end()) throw FixtureError("fixture '" + line + "' lacks parameter " + std::string(key));
    return it->second;
  }
  double number(std::string_view key) const {
    try {
      return std::stod(text(key));
    } catch (const std::logic_error&) {
      throw FixtureError("fixture '" + line + "': parameter " + std::string(key) + " is not a number");
    }
  }
  /// Parameters as written, for display: "a=1 b=2".
  std::string label() const {
    std::string s = name;
    for (const auto& [k, v] : params) s += " " + k + "=" + v;
    return s;
  }
};

inline std::vector<Fixture> parse_fixtures(std::istream& in) {
  std::vector<Fixture> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Fixture f;
    f.line = line;
    ls >> f.name;
    bool have_value = false, have_tol = false;
    std::string tok;
    while (ls >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos || eq == 0) throw FixtureError("fixtures line " + std::to_string(lineno) + ": bad token " + tok);
      const auto key = tok.substr(0, eq);
      const auto val = tok.substr(eq + 1);
      try {
        if (key == "value") {
          f.value = std::stod(val);
          have_value = true;
        } else if (key == "tol") {
          f.tol = std::stod(val);
          have_tol = true;
        } else {
          f.params.emplace(key, val);
        }
      } catch (const std::logic_error&) {
        throw FixtureError("fixtures line " + std::to_string(lineno) + ": bad number in " + tok);
      }
    }
    if (!have_value || !have_tol) throw FixtureError("fixtures line " + std::to_string(lineno) + ": missing value or tol");
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixtures file " + path);
  return parse_fixtures(in);
}

// --- validation runner ------------------------------------------------------

enum class Compare { Relative, Absolute };

struct CheckResult {
  std::string group;
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
  double tol = 0.0;
  Compare mode = Compare::Relative;
  bool passed = false;
  std::string note;
};

inline bool within(double expected, double actual, double tol, Compare mode) {
  const double diff = std::abs(actual - expected);
  if (mode == Compare::Absolute || expected == 0.0) return diff <= tol;
  return diff <= tol * std::abs(expected);
}

struct Check {
  std::string group;
  std::string name;
  std::function<CheckResult()> run;
};

namespace detail {

inline CheckResult compare(std::string group, std::string name, double expected, double actual, double tol,
                           Compare mode = Compare::Relative) {
  CheckResult r{std::move(group), std::move(name), expected, actual, tol, mode, false, {}};
  r.passed = within(expected, actual, tol, mode);
  return r;
}

inline CheckResult predicate(std::string group, std::string name, bool ok, std::string note) {
  CheckResult r{std::move(group), std::move(name), 1.0, ok ? 1.0 : 0.0, 0.0, Compare::Absolute, ok, std::move(note)};
  return r;
}

inline FieldKind field_of(const Fixture& f) {
  const auto& s = f.text("field");
  if (s == "scalar") return FieldKind::ScalarDirichlet;
  if (s == "em") return FieldKind::Electromagnetic;
  throw FixtureError("fixture '" + f.line + "': unknown field " + s);
}

inline std::vector<double> betas_of(const Fixture& f) {
  return {f.number("beta_a"), f.number("beta_b"), f.number("beta_c")};
}

/// Library value for a fixture record.
inline double library_value(const Fixture& f, const ToleranceConfig& cfg) {
  const auto& n = f.name;
  if (n == "bessel_k") return bessel_k(f.number("order"), f.number("x"));
  if (n == "lattice_g") return lattice_g(f.number("z"), cfg.rel_tol, cfg);
  if (n == "lattice_r") return lattice_r(f.number("z1"), f.number("z2"), cfg.rel_tol, cfg);
  if (n == "e0_scalar") return e0_scalar(BoxGeometry(f.number("a"), f.number("b"), f.number("c")), cfg);
  if (n == "e0_em") return e0_em(BoxGeometry(f.number("a"), f.number("b"), f.number("c")), cfg);
  if (n == "x_scalar" || n == "y_em") {
    const auto b = betas_of(f);
    return reduced_log_sum(n == "x_scalar" ? FieldKind::ScalarDirichlet : FieldKind::Electromagnetic,
                           {b[0], b[1], b[2]}, cfg);
  }
  const auto cube_at = [&] { return BoxGeometry::cube(units::um_to_m(f.number("a_um"))); };
  const auto tp_at = [&] { return units::thermal_point_kelvin(f.number("T_K")); };
  if (n == "reduced_t") return tp_at().reduced_t(units::um_to_m(f.number("a_um")));
  if (n == "thermal_raw") {
    const auto g = cube_at();
    return g.a() * thermal_raw(g, field_of(f), tp_at(), cfg);
  }
  if (n == "internal_energy") {
    const auto g = cube_at();
    return g.a() * internal_energy(g, field_of(f), tp_at(), cfg);
  }
  throw FixtureError("fixture '" + f.line + "': unknown record " + n);
}

/// Oracle value for a fixture record, where an oracle exists.
inline std::optional<double> oracle_value(const Fixture& f) {
  const auto& n = f.name;
  if (n == "bessel_k") return oracle_bessel_k(f.number("order"), f.number("x"));
  const auto cutoff = [&] { return static_cast<long long>(f.number("cutoff")); };
  if (n == "lattice_g") {
    const double p[] = {f.number("z")};
    return oracle_lattice(LatticeKind::G, p, cutoff());
  }
  if (n == "lattice_r") {
    const double p[] = {f.number("z1"), f.number("z2")};
    return oracle_lattice(LatticeKind::R, p, cutoff());
  }
  if (n == "x_scalar" || n == "y_em") {
    const auto b = betas_of(f);
    return oracle_lattice(n == "x_scalar" ? LatticeKind::XScalar : LatticeKind::YEm, b, cutoff());
  }
  return std::nullopt;
}

inline std::string group_of(const std::string& record) {
  if (record == "bessel_k") return "specfun";
  if (record == "lattice_g" || record == "lattice_r" || record == "x_scalar" || record == "y_em") return "lattice";
  if (record == "e0_scalar" || record == "e0_em") return "boxzero";
  return "thermal";
}

/// Crossing of E0_em(a; b = c = 10) through zero inside [lo, hi], by bisection.
inline std::optional<double> em_zero_in(double lo, double hi, const ToleranceConfig& cfg) {
  const auto e = [&](double a) { return e0_em(BoxGeometry(a, 10.0, 10.0), cfg); };
  double flo = e(lo), fhi = e(hi);
  if (std::signbit(flo) == std::signbit(fhi)) return std::nullopt;
  for (int i = 0; i < 60 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = e(mid);
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace detail

/// All checks: every fixture against the library (and against its oracle,
/// where one exists), oracle self-consistency, thermodynamic and pressure
/// consistency, and closed-form reference values.
inline std::vector<Check> collect_checks(const std::vector<Fixture>& fixtures, const ToleranceConfig& cfg = {}) {
  using detail::compare;
  using detail::predicate;
  std::vector<Check> checks;

  for (const auto& fx : fixtures) {
    const auto group = detail::group_of(fx.name);
    checks.push_back({group, fx.label(), [=] {
                        return compare(group, fx.label(), fx.value, detail::library_value(fx, cfg), fx.tol);
                      }});
    if (fx.name == "bessel_k" || group == "lattice") {
      const auto name = fx.label() + " [oracle]";
      checks.push_back({group, name, [=] {
                          const auto v = detail::oracle_value(fx);
                          return compare(group, name, fx.value, v.value_or(NAN), fx.tol);
                        }});
    }
  }

  // Bessel functions against quadrature on a logarithmic grid.
  for (double nu : {0.5, 1.0, 1.5}) {
    const auto name = "bessel_k order=" + std::to_string(nu).substr(0, 3) + " grid(20) vs quadrature";
    checks.push_back({"specfun", name, [=] {
                        double worst = 0.0;
                        for (int i = 0; i < 20; ++i) {
                          const double x = 0.01 * std::pow(5000.0, i / 19.0);
                          const double q = oracle_bessel_k(nu, x);
                          worst = std::max(worst, std::abs(bessel_k(nu, x) - q) / q);
                        }
                        return compare("specfun", name, 0.0, worst, 1e-11, Compare::Absolute);
                      }});
  }
  checks.push_back({"specfun", "bessel_k order=0.5 x=1 closed form vs quadrature", [] {
                      return compare("specfun", "bessel_k order=0.5 x=1 closed form vs quadrature",
                                     std::sqrt(constants::pi / 2.0) * std::exp(-1.0), oracle_bessel_k(0.5, 1.0), 1e-13);
                    }});
  checks.push_back({"lattice", "lattice_g z=10 negligible", [cfg] {
                      const double v = lattice_g(10.0, cfg.rel_tol, cfg);
                      char note[48];
                      std::snprintf(note, sizeof note, "|G(10)| = %.3e", std::abs(v));
                      return predicate("lattice", "lattice_g z=10 negligible", std::abs(v) < 1e-25, note);
                    }});

  // Thermodynamic consistency.
  const auto thermo = [&](FieldKind field, double a_um, double T_K) {
    char name[96];
    std::snprintf(name, sizeof name, "U,S vs finite differences field=%s a_um=%g T_K=%g",
                  std::string(to_string(field)).c_str(), a_um, T_K);
    checks.push_back({"thermal", name, [=, n = std::string(name)] {
                        const auto r = oracle_thermo_consistency(BoxGeometry::cube(units::um_to_m(a_um)), field,
                                                                 units::thermal_point_kelvin(T_K), 1e-3, cfg);
                        return compare("thermal", n, 0.0, r.max_rel_deviation, 1e-4, Compare::Absolute);
                      }});
  };
  thermo(FieldKind::Electromagnetic, 2.0, 300.0);
  thermo(FieldKind::ScalarDirichlet, 2.0, 50.0);
  thermo(FieldKind::ScalarDirichlet, 2.0, 300.0);

  // Plates.
  const auto plates_at_t = [](double a, double t) { return PlatesConfig(a, ThermalPoint(1.0 / (2.0 * a * t))); };
  checks.push_back({"plates", "plates T=0 energy", [] {
                      const PlatesConfig p(1.0, ThermalPoint::zero());
                      return compare("plates", "plates T=0 energy", -constants::pi * constants::pi / 720.0,
                                     plates_free_energy(p), 0.0);
                    }});
  checks.push_back({"plates", "plates T=0 pressure", [cfg] {
                      const PlatesConfig p(1.0, ThermalPoint::zero());
                      return compare("plates", "plates T=0 pressure", -constants::pi * constants::pi / 240.0,
                                     plates_pressure(p, cfg), 1e-8);
                    }});
  checks.push_back({"plates", "plates t=10 energy vs low-T expansion", [=] {
                      const auto p = plates_at_t(1.0, 10.0);
                      return compare("plates", "plates t=10 energy vs low-T expansion", plates_free_energy_low_t(p),
                                     plates_free_energy(p, cfg), 1e-6);
                    }});
  checks.push_back({"plates", "plates t=10 pressure vs low-T expansion", [=] {
                      const auto p = plates_at_t(1.0, 10.0);
                      return compare("plates", "plates t=10 pressure vs low-T expansion", plates_pressure_low_t(p),
                                     plates_pressure(p, cfg), 1e-5);
                    }});
  checks.push_back({"plates", "plates t=0.05 energy vs classical limit", [=] {
                      const auto p = plates_at_t(1.0, 0.05);
                      return compare("plates", "plates t=0.05 energy vs classical limit",
                                     plates_free_energy_classical(p), plates_free_energy(p, cfg), 1e-3);
                    }});
  checks.push_back({"plates", "plates t=0.05 pressure vs classical limit", [=] {
                      const auto p = plates_at_t(1.0, 0.05);
                      return compare("plates", "plates t=0.05 pressure vs classical limit",
                                     plates_pressure_classical(p), plates_pressure(p, cfg), 1e-3);
                    }});
  checks.push_back({"plates", "plates representations agree for t in [0.4, 0.7]", [=] {
                      double worst = 0.0;
                      for (int i = 0; i <= 12; ++i) {
                        const auto p = plates_at_t(1.0, 0.4 + 0.025 * i);
                        const double lo = plates_free_energy_low_series(p, cfg);
                        const double hi = plates_free_energy_high_series(p, cfg);
                        worst = std::max(worst, std::abs(lo - hi) / std::abs(hi));
                      }
                      return compare("plates", "plates representations agree for t in [0.4, 0.7]", 0.0, worst, 1e-9,
                                     Compare::Absolute);
                    }});
  checks.push_back({"plates", "plates a_um=1 T_K=300 pressure vs five-point -dF/da", [=] {
                      const PlatesConfig p(units::um_to_m(1.0), units::thermal_point_kelvin(300.0));
                      const auto r = oracle_plates_pressure_consistency(p, 1e-3, cfg);
                      return compare("plates", "plates a_um=1 T_K=300 pressure vs five-point -dF/da", 0.0,
                                     r.rel_deviation, 1e-5, Compare::Absolute);
                    }});

  // Closed-form reference values.
  checks.push_back({"golden", "EM cube a*E0", [cfg] {
                      return compare("golden", "EM cube a*E0", 0.09166, e0_em(BoxGeometry::cube(1.0), cfg), 5e-4,
                                     Compare::Absolute);
                    }});
  checks.push_back({"golden", "EM E0 zero for b=c=10 inside a in [33.9, 34.6]", [cfg] {
                      const auto z = detail::em_zero_in(33.9, 34.6, cfg);
                      return compare("golden", "EM E0 zero for b=c=10 inside a in [33.9, 34.6]", 34.29,
                                     z.value_or(NAN), 0.35, Compare::Absolute);
                    }});
  checks.push_back({"golden", "blackbody internal-energy density", [] {
                      const ThermalPoint tp(0.37);
                      const double t4 = std::pow(0.37, 4);
                      return compare("golden", "blackbody internal-energy density",
                                     constants::pi * constants::pi * t4 / 15.0,
                                     blackbody_internal_energy_density(tp, FieldKind::Electromagnetic), 1e-10);
                    }});
  checks.push_back({"golden", "right-angle wedge coefficient c1(pi/2) = pi/4", [] {
                      return compare("golden", "right-angle wedge coefficient c1(pi/2) = pi/4", constants::pi / 4.0,
                                     wedge_heat_kernel_coeff(constants::pi / 2.0), 1e-15);
                    }});
  checks.push_back({"golden", "heat-kernel a1 = pi (a+b+c) and alpha2 = -a1/24", [] {
                      const BoxGeometry g(1.0, 2.0, 3.5);
                      const auto hk = heat_kernel_coeffs(g);
                      const auto sc = subtraction_coeffs(g, FieldKind::ScalarDirichlet);
                      const bool ok = within(constants::pi * 6.5, hk.a_one, 1e-14, Compare::Relative) &&
                                      within(-hk.a_one / 24.0, sc.alpha2, 1e-14, Compare::Relative);
                      return predicate("golden", "heat-kernel a1 = pi (a+b+c) and alpha2 = -a1/24", ok, "");
                    }});
  checks.push_back({"golden", "alpha1 = -zeta(3) a_half / (4 pi^(3/2))", [] {
                      const BoxGeometry g(1.0, 2.0, 3.5);
                      const auto hk = heat_kernel_coeffs(g);
                      return compare("golden", "alpha1 = -zeta(3) a_half / (4 pi^(3/2))",
                                     -constants::zeta3 * hk.a_half / (4.0 * std::pow(constants::pi, 1.5)),
                                     subtraction_coeffs(g, FieldKind::ScalarDirichlet).alpha1, 1e-14);
                    }});
  return checks;
}

/// A check is selected when the filter is empty, equals its group, or occurs
/// in its name.
inline bool selected(const Check& c, std::string_view filter) {
  return filter.empty() || c.group == filter || c.name.find(filter) != std::string::npos;
}

inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, std::string_view filter = {}) {
  std::vector<CheckResult> out;
  for (const auto& c : checks) {
    if (!selected(c, filter)) continue;
    try {
      out.push_back(c.run());
    } catch (const std::exception& e) {
      CheckResult r;
      r.group = c.group;
      r.name = c.name;
      r.expected = r.actual = NAN;
      r.note = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

inline void print_result(std::ostream& os, const CheckResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, " expected=%.12g actual=%.12g tol=%.3g%s", r.expected, r.actual, r.tol,
                r.mode == Compare::Absolute ? " (abs)" : "");
  os << (r.passed ? "PASS " : "FAIL ") << r.group << ": " << r.name << buf;
  if (!r.note.empty()) os << " [" << r.note << "]";
  os << '\n';
}

struct ValidationSummary {
  int passed = 0;
  int failed = 0;
  bool ok() const { return failed == 0 && passed > 0; }
};

inline ValidationSummary run_validation(const std::vector<Fixture>& fixtures, std::string_view filter, std::ostream& os,
                                        const ToleranceConfig& cfg = {}) {
  ValidationSummary s;
  for (const auto& r : run_checks(collect_checks(fixtures, cfg), filter)) {
    print_result(os, r);
    (r.passed ? s.passed : s.failed)++;
  }
  os << s.passed << " passed, " << s.failed << " failed\n";
  return s;
}

} // namespace casimir::validate
